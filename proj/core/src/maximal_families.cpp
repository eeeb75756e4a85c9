#include <string>
#include <unordered_set>

#include "family_index.hpp"
#include "hgkit/canonical.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/extremal.hpp"
#include "maximal_cliques.hpp"

namespace hgkit {

int default_max_n(int r) {
  switch (r) {
    case 1: return 64;
    case 2: return 12;
    case 3: return 9;
    case 4: return 7;
    default: return 2 * r - 1;
  }
}

void check_search_limits(int n, int r, bool allow_large) {
  if (r < 1 || n < r)
    throw PreconditionError("search needs 1 <= r <= n (n=" + std::to_string(n) + ", r=" +
                            std::to_string(r) + ")");
  if (!allow_large && n > default_max_n(r))
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the default search limit n <= " +
                        std::to_string(default_max_n(r)) + " for r=" + std::to_string(r) +
                        "; pass allow_large to override");
  if (n > 64 || binomial(n, r) > detail::FamilyBits::kBits)
    throw LimitExceeded("C(" + std::to_string(n) + ", " + std::to_string(r) +
                        ") r-sets exceed the search capacity of 256");
}

EnumerationStats enumerate_maximal_intersecting(int n, int r,
                                                const std::function<void(const Hypergraph&)>& visit,
                                                const MaximalFamilyOptions& options,
                                                SearchBudget budget) {
  check_search_limits(n, r, options.allow_large);
  detail::SubsetIndex index(n, r);
  EnumerationStats stats;
  std::unordered_set<detail::FamilyBits, detail::FamilyBitsHash> seen_classes;
  detail::MaximalCliqueSearch search(index, budget, options.one_per_iso_class);
  search.run([&](const detail::FamilyBits& family) {
    Hypergraph h = index.to_hypergraph(family);
    if (options.one_per_iso_class) {
      auto key = index.from_hypergraph(canonical_form(h));
      if (!seen_classes.insert(key).second) return;
    }
    ++stats.families;
    visit(h);
  });
  stats.nodes = budget.nodes();
  return stats;
}

std::vector<Hypergraph> maximal_intersecting_families(int n, int r, const MaximalFamilyOptions& options) {
  std::vector<Hypergraph> out;
  enumerate_maximal_intersecting(n, r, [&](const Hypergraph& h) { out.push_back(h); }, options);
  return out;
}

}  // namespace hgkit
