#pragma once

#include <optional>

#include "hgkit/counting.hpp"
#include "hgkit/hypergraph.hpp"

namespace hgkit {

/// Parameters of an r-uniform k-kernel system on n vertices.
/// Valid when 1 <= k <= r <= n and n >= 2k - 1.
struct KernelParams {
  int n = 0;
  int r = 0;
  int k = 0;

  /// Throws PreconditionError naming the violated inequality.
  void validate() const;
  friend bool operator==(const KernelParams&, const KernelParams&) = default;
};

/// The kernel X = {0, ..., 2k-2}.
VertexSet kernel_set(int k);

/// All r-sets E of [0, n) with |E ∩ X| >= k, where X = kernel_set(k).
Hypergraph build_kernel_system(const KernelParams& p);

/// sum_{i=k}^{min(r, 2k-1)} C(2k-1, i) C(n-2k+1, r-i)
BigInt kernel_edge_count(const KernelParams& p);

/// First (2k-1)-set X in lexicographic order such that every edge of h meets
/// X in at least k vertices; nullopt if there is none.
std::optional<VertexSet> kernel_cover(const Hypergraph& h, int k);

}  // namespace hgkit
