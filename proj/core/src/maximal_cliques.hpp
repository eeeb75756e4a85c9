#pragma once

#include <utility>

#include "family_index.hpp"
#include "hgkit/budget.hpp"

namespace hgkit::detail {

/// Bron–Kerbosch with Tomita pivoting on the intersection graph of r-sets.
/// Each maximal clique (= maximal intersecting family) is reported once.
/// With `fix_first`, only cliques containing r-set 0 = {0, ..., r-1} are
/// reported; every non-empty family is isomorphic to one of those.
class MaximalCliqueSearch {
 public:
  MaximalCliqueSearch(const SubsetIndex& index, SearchBudget& budget, bool fix_first)
      : index_(index), budget_(budget), fix_first_(fix_first) {}

  template <typename Visit>
  void run(Visit&& visit) {
    FamilyBits all;
    for (std::size_t i = 0; i < index_.size(); ++i) all.set(i);
    if (fix_first_ && index_.size() > 0) {
      FamilyBits start;
      start.set(0);
      expand(start, index_.meets(0), FamilyBits{}, visit);
    } else {
      expand(FamilyBits{}, all, FamilyBits{}, visit);
    }
  }

 private:
  template <typename Visit>
  void expand(const FamilyBits& clique, FamilyBits candidates, FamilyBits excluded, Visit& visit) {
    budget_.charge();
    if (candidates.none()) {
      if (excluded.none()) visit(clique);
      return;
    }
    int pivot = -1;
    int best = -1;
    auto consider = [&](int u) {
      int c = candidates.intersection_count(index_.meets(static_cast<std::size_t>(u)));
      if (c > best) {
        best = c;
        pivot = u;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    FamilyBits branch = candidates - index_.meets(static_cast<std::size_t>(pivot));
    for (int v = branch.first(); v >= 0; v = branch.next(v)) {
      const auto vv = static_cast<std::size_t>(v);
      FamilyBits grown = clique;
      grown.set(vv);
      expand(grown, candidates & index_.meets(vv), excluded & index_.meets(vv), visit);
      candidates.reset(vv);
      excluded.set(vv);
    }
  }

  const SubsetIndex& index_;
  SearchBudget& budget_;
  bool fix_first_;
};

}  // namespace hgkit::detail
