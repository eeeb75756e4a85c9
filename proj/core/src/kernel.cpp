#include "hgkit/kernel.hpp"

#include <algorithm>
#include <string>

#include "hgkit/errors.hpp"

namespace hgkit {

void KernelParams::validate() const {
  auto fail = [&](const std::string& why) {
    throw PreconditionError("kernel system (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                            ", k=" + std::to_string(k) + ") requires " + why);
  };
  if (k < 1) fail("k >= 1");
  if (r < k) fail("r >= k");
  if (n < r) fail("n >= r");
  if (n < 2 * k - 1) fail("n >= 2k-1");
  if (n > kMaxVertices) fail("n <= " + std::to_string(kMaxVertices));
}

VertexSet kernel_set(int k) { return VertexSet::range(0, 2 * k - 1); }

Hypergraph build_kernel_system(const KernelParams& p) {
  p.validate();
  const VertexSet x = kernel_set(p.k);
  const VertexSet outside = VertexSet::range(0, p.n) - x;
  std::vector<VertexSet> edges;
  for (int i = p.k; i <= std::min(p.r, 2 * p.k - 1); ++i) {
    auto inner = subsets_of(x, i);
    auto outer = subsets_of(outside, p.r - i);
    for (const auto& a : inner)
      for (const auto& b : outer) edges.push_back(a | b);
  }
  return Hypergraph(p.n, p.r, std::move(edges));
}

BigInt kernel_edge_count(const KernelParams& p) {
  p.validate();
  BigInt total = 0;
  const int x = 2 * p.k - 1;
  for (int i = p.k; i <= std::min(p.r, x); ++i)
    total += binomial(x, i) * binomial(p.n - x, p.r - i);
  return total;
}

std::optional<VertexSet> kernel_cover(const Hypergraph& h, int k) {
  if (k < 1 || k > h.r())
    throw PreconditionError("kernel cover requires 1 <= k <= r (k=" + std::to_string(k) +
                            ", r=" + std::to_string(h.r()) + ")");
  std::optional<VertexSet> found;
  for_each_subset(h.n(), 2 * k - 1, [&](const VertexSet& x) {
    for (const auto& e : h.edges())
      if (e.intersection_size(x) < k) return true;
    found = x;
    return false;
  });
  return found;
}

}  // namespace hgkit
