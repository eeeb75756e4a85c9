#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hgkit/budget.hpp"
#include "hgkit/counting.hpp"
#include "hgkit/hypergraph.hpp"

namespace hgkit {

/// Largest n searched by default for uniformity r. Beyond it the searches
/// refuse with LimitExceeded unless `allow_large` is set.
int default_max_n(int r);

/// Largest n accepted by the naive oracle without `allow_large`.
inline constexpr int kNaiveMaxN = 7;

/// Throws LimitExceeded if (n, r) is outside the default limits (and
/// allow_large is false) or outside the hard capacity C(n, r) <= 256.
void check_search_limits(int n, int r, bool allow_large);

/// The unique largest sub-family of h with minimum positive co-degree >= k:
/// repeatedly deletes every edge containing an (r-1)-set of positive
/// degree < k.
Hypergraph codegree_core(const Hypergraph& h, int k);

struct MaximalFamilyOptions {
  /// Yield one representative per isomorphism class.
  bool one_per_iso_class = false;
  bool allow_large = false;
};

struct EnumerationStats {
  std::uint64_t families = 0;
  std::uint64_t nodes = 0;
};

/// Streams every maximal intersecting r-uniform family on [0, n) to `visit`,
/// each exactly once (or one per isomorphism class). Families are the
/// maximal cliques of the graph on r-sets joined when they intersect,
/// enumerated by Bron–Kerbosch with pivoting.
EnumerationStats enumerate_maximal_intersecting(int n, int r,
                                                const std::function<void(const Hypergraph&)>& visit,
                                                const MaximalFamilyOptions& options = {},
                                                SearchBudget budget = {});

std::vector<Hypergraph> maximal_intersecting_families(int n, int r,
                                                      const MaximalFamilyOptions& options = {});

struct SearchOptions {
  /// Restrict the enumeration to families containing {0, ..., r-1} and
  /// report how many isomorphism classes attain the maximum.
  bool iso = false;
  /// Also run the naive oracle and record whether it agrees.
  bool naive_check = false;
  bool allow_large = false;
  SearchBudget budget;
};

struct SearchReport {
  int n = 0;
  int r = 0;
  int k = 0;
  std::size_t max_edges = 0;
  /// The optimizer with the lexicographically smallest canonical form,
  /// given in that canonical labelling.
  Hypergraph optimizer{0, 1};
  /// Number of labelled optimizers seen by the search.
  std::size_t optimizer_count = 0;
  /// kernel_edge_count(n, r, k) when n >= 2k-1.
  std::optional<BigInt> kernel_count;
  bool matches_kernel = false;
  /// The (2k-1)-set found by kernel_cover on the optimizer.
  std::optional<VertexSet> kernel;
  bool kernel_covered = false;
  /// Set with `iso`: whether the optimizers form a single isomorphism class.
  std::optional<bool> unique_up_to_iso;
  std::optional<std::size_t> optimizer_classes;
  std::uint64_t maximal_families = 0;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;
  std::optional<std::size_t> naive_max_edges;
  std::optional<std::uint64_t> naive_nodes;
  std::optional<bool> naive_agrees;
};

/// Maximum size of an intersecting r-uniform family on [0, n) with minimum
/// positive co-degree >= k: the best codegree_core(M, k) over all maximal
/// intersecting M. Requires 1 <= k <= r <= n.
SearchReport max_intersecting_with_codegree(int n, int r, int k, SearchOptions options = {});

struct NaiveResult {
  std::size_t max_edges = 0;
  std::uint64_t nodes = 0;
};

/// Reference oracle: depth-first over every intersecting family (edges added
/// in canonical order), testing the co-degree condition at each one.
NaiveResult max_intersecting_naive(int n, int r, int k, bool allow_large = false,
                                   SearchBudget budget = {});

struct UniformityCheck {
  bool holds = false;
  std::size_t codegree = 0;
  /// Two disjoint edges produced by the replacement walk (witness mode).
  std::optional<std::pair<VertexSet, VertexSet>> disjoint_pair;
};

/// Checks δ⁺(H) <= r for a non-empty intersecting H. With witness_mode,
/// non-intersecting inputs are accepted and, when δ⁺ > r, the replacement
/// walk is run to exhibit two disjoint edges.
UniformityCheck uniformity_bound_check(const Hypergraph& h, bool witness_mode = false);

/// Starting from the first edge {x1..xr}, swaps x1, x2, ... one at a time for
/// fresh vertices, each time following an edge through the current
/// (r-1)-set. Returns (first edge, final edge) if the walk completes; the
/// two are disjoint. Completes whenever every shadow set has degree > r.
std::optional<std::pair<VertexSet, VertexSet>> replacement_walk(const Hypergraph& h);

}  // namespace hgkit
