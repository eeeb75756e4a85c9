#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hgkit/budget.hpp"
#include "hgkit/counting.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/hypergraph.hpp"

namespace hgkit {

bool is_transversal(const Hypergraph& h, const VertexSet& x);

/// A minimum transversal, found by iterative deepening on the size bound and
/// branching on the vertices of the first uncovered edge. The result is the
/// first one reached in that order.
VertexSet minimum_transversal(const Hypergraph& h);

/// Transversal number; 0 for the empty hypergraph.
int tau(const Hypergraph& h);

/// Every edge of `h` contains some member; members are t-sets.
struct CoveringFamily {
  int t = 0;
  std::vector<VertexSet> members;
};

/// Thrown by covering_family when τ(H) < t; carries a smaller transversal.
class TransversalTooSmall : public PreconditionError {
 public:
  explicit TransversalTooSmall(VertexSet certificate);
  const VertexSet& certificate() const noexcept { return certificate_; }

 private:
  VertexSet certificate_;
};

/// Builds the t-uniform covering family by the vertex-selection tree: at each
/// node the selection {v1..vi} is extended by each vertex of the canonically
/// first edge disjoint from it. Result has at most r^t members (duplicates
/// removed). Requires h intersecting and t <= r.
CoveringFamily covering_family(const Hypergraph& h, int t);

/// True iff every edge of h contains a member of f.
bool covers(const CoveringFamily& f, const Hypergraph& h);

/// |E(H)| <= r^τ C(n-τ, r-τ) for intersecting H. A false return means a bug.
bool check_tau_bound(const Hypergraph& h);

/// τ(H) == k for a maximizer H produced by the extremal search.
bool check_tau_equals_k(int n, int r, int k, const Hypergraph& h_opt);

/// Outcome of the exhaustive cross-intersecting search on [0, N).
struct CrossPairReport {
  int N = 0;
  int a = 0;
  /// max |A| + |B|
  std::uint64_t max_value = 0;
  /// C(N, a)
  std::uint64_t bound = 0;
  /// Number of intersecting (a+1)-uniform families B visited.
  std::uint64_t nodes = 0;
  /// Distinct optimal pairs (A maximal given B).
  std::uint64_t optimizer_count = 0;
  /// Every optimizer is (B empty, A complete) or (A, B maximal stars at a
  /// common vertex q).
  bool all_optimizers_match_equality_cases = false;
  std::uint64_t empty_b_optimizers = 0;
  std::uint64_t common_star_optimizers = 0;
  Hypergraph witness_a{0, 0};
  Hypergraph witness_b{0, 1};
};

/// Exact max of |A| + |B| over a-uniform A and intersecting (a+1)-uniform B
/// that are cross-intersecting on N vertices. Requires N > 2a+1.
CrossPairReport max_cross_pair(int N, int a, SearchBudget budget = {});

}  // namespace hgkit
