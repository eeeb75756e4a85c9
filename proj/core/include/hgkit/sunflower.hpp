#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hgkit/hypergraph.hpp"

namespace hgkit {

/// A sunflower: member edges whose pairwise intersections all equal `core`.
/// petals[i] = edges[i] \ core; petals are pairwise disjoint.
struct Sunflower {
  VertexSet core;
  std::vector<VertexSet> petals;
  std::vector<VertexSet> edges;

  std::size_t petal_count() const { return petals.size(); }
};

/// Assembles a Sunflower from a core and its petals (edges = core ∪ petal).
Sunflower make_sunflower(const VertexSet& core, std::vector<VertexSet> petals);

/// Checks the structural invariants edge by edge: petals disjoint from the
/// core and from each other, edges = core ∪ petal, every pairwise
/// intersection equal to the core, no repeated edge.
bool satisfies_invariants(const Sunflower& s);

/// satisfies_invariants and every member edge belongs to h.
bool is_sunflower_of(const Sunflower& s, const Hypergraph& h);

/// Exhaustive search for a sunflower with at least p petals and
/// |core| <= max_core. Candidate cores (the empty set and every pairwise
/// edge intersection) are tried by increasing (size, lexicographic) key;
/// for each core the petals form a maximum disjoint packing. Returns the
/// first hit.
std::optional<Sunflower> find_sunflower_exact(const Hypergraph& h, int p, int max_core);

/// The Erdős–Rado procedure: take a greedy maximal family of pairwise
/// disjoint edges; if it has fewer than p members, recurse into the link of
/// the lowest-id vertex of maximum degree among their union. Always succeeds
/// when |E| >= r!(p-1)^r and r >= 2.
std::optional<Sunflower> erdos_rado_greedy(const Hypergraph& h, int p);

struct SmallCoreTrace {
  std::optional<Sunflower> result;
  /// Sunflowers removed by the iterative phase, in removal order.
  std::vector<Sunflower> removed;
  /// True when `result` came from recombining removed cores.
  bool recombined = false;
};

/// Iteratively removes minimum-core sunflowers with p * r^(c-k) petals
/// (c = core size) and returns the first one whose core has size <= k; when
/// none remain, tries to assemble a sunflower with core size <= k and p
/// petals from a sunflower among the removed cores of a common size.
std::optional<Sunflower> extract_small_core(const Hypergraph& h, int p, int k);
SmallCoreTrace extract_small_core_traced(const Hypergraph& h, int p, int k);

}  // namespace hgkit
