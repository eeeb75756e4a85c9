#include "family_index.hpp"

#include <bit>

#include "hgkit/counting.hpp"
#include "hgkit/errors.hpp"

namespace hgkit::detail {

SubsetIndex::SubsetIndex(int n, int r) : n_(n), r_(r) {
  if (n > 64) throw LimitExceeded("indexed search supports n <= 64");
  if (binomial(n, r) > FamilyBits::kBits)
    throw LimitExceeded("C(" + std::to_string(n) + ", " + std::to_string(r) + ") exceeds " +
                        std::to_string(FamilyBits::kBits) + " r-sets");
  for_each_subset(n, r, [&](const VertexSet& s) {
    lookup_.emplace(s.bits().word(0), sets_.size());
    sets_.push_back(s.bits().word(0));
  });

  std::unordered_map<std::uint64_t, std::uint32_t> shadow_ids;
  subs_.resize(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::uint64_t w = sets_[i]; w; w &= w - 1) {
      std::uint64_t sub = sets_[i] & ~(w & (~w + 1));
      auto [it, inserted] = shadow_ids.emplace(sub, static_cast<std::uint32_t>(shadow_ids.size()));
      if (inserted) supers_.emplace_back();
      subs_[i].push_back(it->second);
      supers_[it->second].push_back(static_cast<std::uint32_t>(i));
    }
  }
  shadow_count_ = shadow_ids.size();

  meets_.resize(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = 0; j < sets_.size(); ++j)
      if (i != j && (sets_[i] & sets_[j])) meets_[i].set(j);
}

Hypergraph SubsetIndex::to_hypergraph(const FamilyBits& family) const {
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(family.count()));
  family.for_each([&](int i) {
    VertexSet::Bits bits;
    bits.set_word(0, sets_[static_cast<std::size_t>(i)]);
    edges.emplace_back(bits);
  });
  return Hypergraph(n_, r_, std::move(edges));
}

FamilyBits SubsetIndex::from_hypergraph(const Hypergraph& h) const {
  FamilyBits out;
  for (const auto& e : h.edges()) out.set(index_of(e.bits().word(0)));
  return out;
}

FamilyBits codegree_core_bits(const SubsetIndex& index, const FamilyBits& family, int k) {
  if (k <= 1) return family;
  std::vector<int> count(index.shadow_size(), 0);
  family.for_each([&](int i) {
    for (auto s : index.subs(static_cast<std::size_t>(i))) ++count[s];
  });

  FamilyBits alive = family;
  std::vector<std::uint32_t> deficient;
  for (std::uint32_t s = 0; s < count.size(); ++s)
    if (count[s] > 0 && count[s] < k) deficient.push_back(s);

  // Every edge through a deficient (r-1)-set must go; removals may create
  // new deficient sets.
  while (!deficient.empty()) {
    std::uint32_t s = deficient.back();
    deficient.pop_back();
    for (auto e : index.supers(s)) {
      if (!alive.test(e)) continue;
      alive.reset(e);
      for (auto t : index.subs(e)) {
        if (count[t]-- == k) deficient.push_back(t);
      }
    }
  }
  return alive;
}

}  // namespace hgkit::detail
