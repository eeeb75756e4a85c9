#pragma once

#include "hgkit/hypergraph.hpp"

namespace hgkit {

/// Canonical representative of the isomorphism class of h.
///
/// Vertices are first split into classes by iterated colour refinement
/// (degree, then the multiset of co-member colours per edge). The result is
/// the lexicographically smallest edge list over all relabellings that send
/// each class to its block of labels. Requires n <= 64; throws LimitExceeded
/// when the classes admit more than 10^7 relabellings.
Hypergraph canonical_form(const Hypergraph& h);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hgkit
