#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "family_index.hpp"
#include "hgkit/canonical.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/extremal.hpp"
#include "hgkit/kernel.hpp"
#include "maximal_cliques.hpp"

namespace hgkit {

namespace {

void check_search_params(int n, int r, int k) {
  if (k < 1 || k > r || r > n)
    throw PreconditionError("extremal search requires 1 <= k <= r <= n (n=" + std::to_string(n) +
                            ", r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")");
}

bool edges_less(const Hypergraph& a, const Hypergraph& b) {
  return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(),
                                      b.edges().end());
}

}  // namespace

SearchReport max_intersecting_with_codegree(int n, int r, int k, SearchOptions options) {
  check_search_params(n, r, k);
  check_search_limits(n, r, options.allow_large);
  const auto start = std::chrono::steady_clock::now();

  detail::SubsetIndex index(n, r);
  SearchReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;

  std::size_t best = 0;
  std::unordered_set<detail::FamilyBits, detail::FamilyBitsHash> optimizers;
  detail::MaximalCliqueSearch search(index, options.budget, options.iso);
  search.run([&](const detail::FamilyBits& family) {
    ++rep.maximal_families;
    detail::FamilyBits core = detail::codegree_core_bits(index, family, k);
    const auto size = static_cast<std::size_t>(core.count());
    if (size < best) return;
    if (size > best) {
      best = size;
      optimizers.clear();
    }
    optimizers.insert(core);
  });
  rep.nodes = options.budget.nodes();
  rep.max_edges = best;
  rep.optimizer_count = optimizers.size();

  // Report the optimizer whose canonical form is smallest.
  std::set<std::vector<VertexSet>> classes;
  std::optional<Hypergraph> chosen;
  for (const auto& family : optimizers) {
    Hypergraph canon = canonical_form(index.to_hypergraph(family));
    classes.insert({canon.edges().begin(), canon.edges().end()});
    if (!chosen || edges_less(canon, *chosen)) chosen = std::move(canon);
  }
  rep.optimizer = chosen ? *chosen : Hypergraph(n, r);
  if (options.iso) {
    rep.optimizer_classes = classes.size();
    rep.unique_up_to_iso = classes.size() == 1;
  }

  if (n >= 2 * k - 1) {
    rep.kernel_count = kernel_edge_count({n, r, k});
    rep.matches_kernel = BigInt(rep.max_edges) == *rep.kernel_count;
  }
  if (!rep.optimizer.empty()) {
    rep.kernel = kernel_cover(rep.optimizer, k);
    rep.kernel_covered = rep.kernel.has_value();
  }

  if (options.naive_check) {
    NaiveResult naive = max_intersecting_naive(n, r, k, options.allow_large);
    rep.naive_max_edges = naive.max_edges;
    rep.naive_nodes = naive.nodes;
    rep.naive_agrees = naive.max_edges == rep.max_edges;
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

// DFS over every intersecting family, tracking (r-1)-sets whose degree is
// positive but below k.
class NaiveSearch {
 public:
  NaiveSearch(int n, int r, int k, SearchBudget& budget) : k_(k), budget_(budget) {
    for_each_subset(n, r, [&](const VertexSet& s) { sets_.push_back(s); });
    std::map<VertexSet, int> shadow_ids;
    for (const auto& e : sets_) {
      std::vector<int> ids;
      e.for_each([&](int v) {
        VertexSet s = e;
        s.erase(v);
        auto [it, _] = shadow_ids.emplace(s, static_cast<int>(shadow_ids.size()));
        ids.push_back(it->second);
      });
      subs_.push_back(std::move(ids));
    }
    count_.assign(shadow_ids.size(), 0);
  }

  NaiveResult run() {
    chosen_.clear();
    visit(0);
    return {best_, budget_.nodes()};
  }

 private:
  void visit(std::size_t from) {
    budget_.charge();
    if (!chosen_.empty() && deficient_ == 0) best_ = std::max(best_, chosen_.size());
    for (std::size_t j = from; j < sets_.size(); ++j) {
      bool ok = std::all_of(chosen_.begin(), chosen_.end(),
                            [&](std::size_t i) { return sets_[i].intersects(sets_[j]); });
      if (!ok) continue;
      add(j);
      visit(j + 1);
      remove(j);
    }
  }

  bool is_deficient(int c) const { return c >= 1 && c < k_; }

  void add(std::size_t j) {
    chosen_.push_back(j);
    for (int s : subs_[j]) {
      int& c = count_[static_cast<std::size_t>(s)];
      deficient_ -= is_deficient(c);
      ++c;
      deficient_ += is_deficient(c);
    }
  }

  void remove(std::size_t j) {
    chosen_.pop_back();
    for (int s : subs_[j]) {
      int& c = count_[static_cast<std::size_t>(s)];
      deficient_ -= is_deficient(c);
      --c;
      deficient_ += is_deficient(c);
    }
  }

  int k_;
  SearchBudget& budget_;
  std::vector<VertexSet> sets_;
  std::vector<std::vector<int>> subs_;
  std::vector<int> count_;
  std::vector<std::size_t> chosen_;
  int deficient_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

NaiveResult max_intersecting_naive(int n, int r, int k, bool allow_large, SearchBudget budget) {
  check_search_params(n, r, k);
  if (!allow_large && n > kNaiveMaxN)
    throw LimitExceeded("naive oracle is limited to n <= " + std::to_string(kNaiveMaxN) +
                        " without allow_large");
  NaiveSearch search(n, r, k, budget);
  return search.run();
}

std::optional<std::pair<VertexSet, VertexSet>> replacement_walk(const Hypergraph& h) {
  if (h.empty()) return std::nullopt;
  const VertexSet first = h.edge(0);
  const auto xs = first.members();
  VertexSet current = first;
  VertexSet forbidden = first;
  for (int x : xs) {
    VertexSet base = current;
    base.erase(x);
    // An edge base ∪ {w} with w outside the original edge and the vertices
    // already brought in.
    std::optional<VertexSet> step;
    for (const auto& e : h.edges()) {
      if (!base.is_subset_of(e)) continue;
      VertexSet w = e - base;
      if (!w.intersects(forbidden)) {
        step = e;
        break;
      }
    }
    if (!step) return std::nullopt;
    forbidden |= *step - base;
    current = *step;
  }
  return std::make_pair(first, current);
}

UniformityCheck uniformity_bound_check(const Hypergraph& h, bool witness_mode) {
  if (h.empty()) throw PreconditionError("uniformity bound needs a non-empty hypergraph");
  const bool intersecting = is_intersecting(h);
  if (!intersecting && !witness_mode)
    throw PreconditionError("uniformity bound needs an intersecting hypergraph");
  UniformityCheck out;
  out.codegree = min_positive_codegree(h);
  out.holds = out.codegree <= static_cast<std::size_t>(h.r());
  if (witness_mode && !out.holds) out.disjoint_pair = replacement_walk(h);
  return out;
}

}  // namespace hgkit
