#pragma once

// Dense indexing of the r-subsets of [0, n) used by the search engines.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hgkit/bit_array.hpp"
#include "hgkit/hypergraph.hpp"

namespace hgkit::detail {

using FamilyBits = BitArray<4>;

struct FamilyBitsHash {
  std::size_t operator()(const FamilyBits& b) const { return b.hash(); }
};

/// r-sets of [0, n) (n <= 64) in lexicographic order, with the index of each
/// (r-1)-subset and the intersection graph between r-sets.
class SubsetIndex {
 public:
  SubsetIndex(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return sets_.size(); }
  std::uint64_t set(std::size_t i) const { return sets_[i]; }
  std::size_t index_of(std::uint64_t mask) const { return lookup_.at(mask); }

  std::size_t shadow_size() const { return shadow_count_; }
  /// Indices of the (r-1)-subsets of set i.
  const std::vector<std::uint32_t>& subs(std::size_t i) const { return subs_[i]; }
  /// Indices of the r-sets containing (r-1)-set s.
  const std::vector<std::uint32_t>& supers(std::size_t s) const { return supers_[s]; }
  /// r-sets meeting set i, excluding i itself.
  const FamilyBits& meets(std::size_t i) const { return meets_[i]; }

  Hypergraph to_hypergraph(const FamilyBits& family) const;
  FamilyBits from_hypergraph(const Hypergraph& h) const;

 private:
  int n_;
  int r_;
  std::vector<std::uint64_t> sets_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::size_t shadow_count_ = 0;
  std::vector<std::vector<std::uint32_t>> subs_;
  std::vector<std::vector<std::uint32_t>> supers_;
  std::vector<FamilyBits> meets_;
};

/// Fast co-degree core on an indexed family.
FamilyBits codegree_core_bits(const SubsetIndex& index, const FamilyBits& family, int k);

}  // namespace hgkit::detail
