#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hgkit/bit_array.hpp"

namespace hgkit {

/// Hard capacity of a VertexSet; every hypergraph has n <= kMaxVertices.
inline constexpr int kMaxVertices = 256;

/// A set of vertex ids in [0, kMaxVertices), stored as a bitset.
///
/// Ordering is lexicographic on the increasing member sequence, so
/// {0,1,2} < {0,1,3} < {0,2,3} < {1,2,3}. This is the canonical edge order
/// used by Hypergraph.
class VertexSet {
 public:
  using Bits = BitArray<kMaxVertices / 64>;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::span<const int> members);
  explicit VertexSet(const Bits& bits) : bits_(bits) {}

  /// {lo, lo+1, ..., hi-1}
  static VertexSet range(int lo, int hi);

  bool contains(int v) const { return v >= 0 && v < kMaxVertices && bits_.test(static_cast<std::size_t>(v)); }
  void insert(int v);
  void erase(int v);

  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  /// Smallest member, or -1 when empty.
  int min() const { return bits_.first(); }
  /// Largest member, or -1 when empty.
  int max() const { return bits_.last(); }
  /// Smallest member greater than v, or -1.
  int next(int v) const { return bits_.next(v); }

  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
  bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
  int intersection_size(const VertexSet& o) const { return bits_.intersection_count(o.bits_); }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) { return VertexSet(a.bits_ - b.bits_); }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_.subtract(o.bits_); return *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  std::vector<int> members() const;
  const Bits& bits() const { return bits_; }

  template <typename F>
  void for_each(F&& f) const { bits_.for_each(std::forward<F>(f)); }

  std::size_t hash() const { return bits_.hash(); }

  /// "{0,1,2}"
  std::string to_string() const;

 private:
  Bits bits_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace hgkit
