#include "hgkit/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "hgkit/errors.hpp"

namespace hgkit {

namespace {

constexpr double kMaxRelabellings = 1e7;

// Lexicographic order of the member sequences for equal-size masks.
bool mask_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

bool family_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_less);
}

std::vector<int> refine_colours(int n, const std::vector<std::uint64_t>& edges) {
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (auto e : edges)
    for (std::uint64_t w = e; w; w &= w - 1) ++colour[static_cast<std::size_t>(std::countr_zero(w))];
  auto classes = [&] {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return std::unique(c.begin(), c.end()) - c.begin();
  };
  // Normalise degrees to ranks so refinement signatures stay small.
  auto rerank = [&](const auto& keys) {
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(v)]) -
          sorted.begin());
  };
  rerank(std::vector<int>(colour));

  using Signature = std::pair<int, std::vector<std::vector<int>>>;
  auto before = classes();
  for (;;) {
    std::vector<Signature> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) sig[static_cast<std::size_t>(v)].first = colour[static_cast<std::size_t>(v)];
    for (auto e : edges) {
      std::vector<int> members;
      for (std::uint64_t w = e; w; w &= w - 1) members.push_back(std::countr_zero(w));
      for (int v : members) {
        std::vector<int> others;
        for (int u : members)
          if (u != v) others.push_back(colour[static_cast<std::size_t>(u)]);
        std::sort(others.begin(), others.end());
        sig[static_cast<std::size_t>(v)].second.push_back(std::move(others));
      }
    }
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
    rerank(sig);
    auto after = classes();
    if (after == before) break;
    before = after;
  }
  return colour;
}

}  // namespace

Hypergraph canonical_form(const Hypergraph& h) {
  const int n = h.n();
  if (n > 64) throw LimitExceeded("canonical form supports n <= 64");
  if (h.empty()) return h;

  std::vector<std::uint64_t> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) edges.push_back(e.bits().word(0));

  auto colour = refine_colours(n, edges);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto e : edges)
    for (std::uint64_t w = e; w; w &= w - 1) ++degree[static_cast<std::size_t>(std::countr_zero(w))];

  // Cells in colour order; isolated vertices never need permuting.
  std::map<int, std::vector<int>> cells_by_colour;
  for (int v = 0; v < n; ++v) cells_by_colour[colour[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<int>> cells;
  std::vector<bool> permutable;
  double relabellings = 1;
  for (auto& [c, members] : cells_by_colour) {
    bool isolated = degree[static_cast<std::size_t>(members.front())] == 0;
    if (!isolated)
      for (std::size_t i = 2; i <= members.size(); ++i) relabellings *= static_cast<double>(i);
    cells.push_back(members);
    permutable.push_back(!isolated);
  }
  if (relabellings > kMaxRelabellings)
    throw LimitExceeded("canonical form would need more than 1e7 relabellings");

  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> image(edges.size());
  std::vector<std::uint64_t> best;
  for (;;) {
    int next = 0;
    for (const auto& cell : cells)
      for (int v : cell) label[static_cast<std::size_t>(v)] = next++;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::uint64_t m = 0;
      for (std::uint64_t w = edges[i]; w; w &= w - 1)
        m |= std::uint64_t{1} << label[static_cast<std::size_t>(std::countr_zero(w))];
      image[i] = m;
    }
    std::sort(image.begin(), image.end(), mask_less);
    if (best.empty() || family_less(image, best)) best = image;

    // Odometer over the permutations of each permutable cell.
    std::size_t c = cells.size();
    bool advanced = false;
    while (c > 0) {
      --c;
      if (!permutable[c]) continue;
      if (std::next_permutation(cells[c].begin(), cells[c].end())) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  std::vector<VertexSet> out;
  out.reserve(best.size());
  for (auto m : best) {
    VertexSet::Bits bits;
    bits.set_word(0, m);
    out.emplace_back(bits);
  }
  return Hypergraph(n, h.r(), std::move(out));
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hgkit
