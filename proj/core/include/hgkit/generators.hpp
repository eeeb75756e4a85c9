#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hgkit/hypergraph.hpp"

namespace hgkit {

/// All r-sets of [0, n) containing `center` (the maximal star).
Hypergraph star(int n, int r, int center = 0);

/// All r-subsets of [0, n).
Hypergraph complete(int n, int r);

/// All r-subsets of [0, n) containing the fixed set Y.
Hypergraph containing_set(int n, int r, const VertexSet& y);

/// Complete r-partite r-uniform hypergraph; parts are consecutive blocks of
/// the given sizes.
Hypergraph complete_multipartite(std::span<const int> part_sizes);

/// Lines of the Fano plane on [0, 7).
Hypergraph fano_plane();

/// Image of h under the vertex map v -> perm[v].
Hypergraph relabel(const Hypergraph& h, std::span<const int> perm);

using Rng = std::mt19937_64;

/// m distinct r-sets of [0, n) drawn uniformly at random.
Hypergraph random_hypergraph(int n, int r, std::size_t m, Rng& rng);

/// Each edge of h kept independently with probability keep.
Hypergraph random_subfamily(const Hypergraph& h, double keep, Rng& rng);

/// Random non-empty intersecting r-uniform hypergraph: a random
/// sub-family of a randomly relabelled k-kernel system (k = 1 is a star).
Hypergraph random_intersecting(int n, int r, Rng& rng);

}  // namespace hgkit
