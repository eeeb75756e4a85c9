#include "hgkit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hgkit/counting.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/kernel.hpp"

namespace hgkit {

Hypergraph star(int n, int r, int center) {
  return containing_set(n, r, VertexSet{center});
}

Hypergraph complete(int n, int r) { return Hypergraph(n, r, all_subsets(n, r)); }

Hypergraph containing_set(int n, int r, const VertexSet& y) {
  if (!y.empty() && y.max() >= n) throw PreconditionError("fixed set outside the universe");
  std::vector<VertexSet> edges;
  for (const auto& rest : subsets_of(VertexSet::range(0, n) - y, r - y.size()))
    edges.push_back(rest | y);
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph complete_multipartite(std::span<const int> part_sizes) {
  int r = static_cast<int>(part_sizes.size());
  std::vector<int> offsets;
  int n = 0;
  for (int sz : part_sizes) {
    if (sz < 1) throw PreconditionError("parts must be non-empty");
    offsets.push_back(n);
    n += sz;
  }
  std::vector<VertexSet> edges;
  std::vector<int> pick(part_sizes.size(), 0);
  for (;;) {
    VertexSet e;
    for (std::size_t i = 0; i < pick.size(); ++i) e.insert(offsets[i] + pick[i]);
    edges.push_back(e);
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < part_sizes[i]) break;
      pick[i] = 0;
      if (i == 0) return Hypergraph(n, r, std::move(edges));
    }
    if (pick.empty()) return Hypergraph(n, r, std::move(edges));
  }
}

Hypergraph fano_plane() {
  return Hypergraph(7, 3,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph relabel(const Hypergraph& h, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(h.n()))
    throw PreconditionError("permutation size does not match n");
  std::vector<VertexSet> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) {
    VertexSet img;
    e.for_each([&](int v) { img.insert(perm[static_cast<std::size_t>(v)]); });
    edges.push_back(img);
  }
  return Hypergraph(h.n(), h.r(), std::move(edges));
}

Hypergraph random_hypergraph(int n, int r, std::size_t m, Rng& rng) {
  if (binomial(n, r) < m)
    throw PreconditionError("cannot draw " + std::to_string(m) + " distinct " +
                            std::to_string(r) + "-sets from " + std::to_string(n) + " vertices");
  std::set<VertexSet> chosen;
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  while (chosen.size() < m) {
    std::shuffle(verts.begin(), verts.end(), rng);
    chosen.insert(VertexSet(std::span<const int>(verts.data(), static_cast<std::size_t>(r))));
  }
  return Hypergraph(n, r, {chosen.begin(), chosen.end()});
}

Hypergraph random_subfamily(const Hypergraph& h, double keep, Rng& rng) {
  std::bernoulli_distribution coin(keep);
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges())
    if (coin(rng)) edges.push_back(e);
  return with_edges(h, std::move(edges));
}

Hypergraph random_intersecting(int n, int r, Rng& rng) {
  if (r < 1 || r > n) throw PreconditionError("need 1 <= r <= n");
  int k_max = std::min(r, (n + 1) / 2);
  int k = std::uniform_int_distribution<int>(1, k_max)(rng);
  Hypergraph base = build_kernel_system({n, r, k});
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  base = relabel(base, perm);
  double keep = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
  Hypergraph sub = random_subfamily(base, keep, rng);
  if (sub.empty()) {
    auto pick = std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng);
    return with_edges(base, {base.edge(pick)});
  }
  return sub;
}

}  // namespace hgkit
