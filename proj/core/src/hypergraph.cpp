#include "hgkit/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "hgkit/errors.hpp"

namespace hgkit {

namespace {

void check_dimensions(int n, int r) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  if (r < 0) throw PreconditionError("uniformity must be non-negative");
}

void check_in_universe(const VertexSet& s, int n, const char* what) {
  if (!s.empty() && s.max() >= n)
    throw PreconditionError(std::string(what) + " " + s.to_string() + " has a vertex >= n = " +
                            std::to_string(n));
}

}  // namespace

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) { check_dimensions(n, r); }

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  check_dimensions(n, r);
  for (const auto& e : edges_) {
    if (e.size() != r)
      throw PreconditionError("edge " + e.to_string() + " does not have " + std::to_string(r) +
                              " vertices");
    check_in_universe(e, n, "edge");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw PreconditionError("duplicate edge " + dup->to_string());
}

bool Hypergraph::has_edge(const VertexSet& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t degree(const Hypergraph& h, const VertexSet& s) {
  check_in_universe(s, h.n(), "set");
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(),
                    [&](const VertexSet& e) { return s.is_subset_of(e); }));
}

std::size_t min_positive_codegree(const Hypergraph& h) {
  if (h.empty()) return 0;
  if (h.r() == 0) throw PreconditionError("co-degree is undefined for 0-uniform hypergraphs");
  std::map<VertexSet, std::size_t> counts;
  for (const auto& e : h.edges()) {
    e.for_each([&](int v) {
      VertexSet s = e;
      s.erase(v);
      ++counts[s];
    });
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [s, c] : counts) best = std::min(best, c);
  return best;
}

bool is_intersecting(const Hypergraph& h) {
  auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!edges[i].intersects(edges[j])) return false;
  return true;
}

bool are_cross_intersecting(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n())
    throw PreconditionError("cross-intersection needs a common universe (n = " +
                            std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  for (const auto& x : a.edges())
    for (const auto& y : b.edges())
      if (!x.intersects(y)) return false;
  return true;
}

std::vector<VertexSet> shadow(const Hypergraph& h) {
  if (h.r() == 0) throw PreconditionError("shadow is undefined for 0-uniform hypergraphs");
  std::vector<VertexSet> out;
  out.reserve(h.size() * static_cast<std::size_t>(h.r()));
  for (const auto& e : h.edges()) {
    e.for_each([&](int v) {
      VertexSet s = e;
      s.erase(v);
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Hypergraph derived(const Hypergraph& h, const VertexSet& t, const VertexSet& s) {
  check_in_universe(t, h.n(), "set T");
  if (!s.is_subset_of(t))
    throw PreconditionError("derived hypergraph needs S ⊆ T (S = " + s.to_string() +
                            ", T = " + t.to_string() + ")");
  if (s.size() > h.r())
    throw PreconditionError("|S| = " + std::to_string(s.size()) + " exceeds the uniformity " +
                            std::to_string(h.r()));
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges())
    if ((e & t) == s) edges.push_back(e - s);
  return Hypergraph(h.n(), h.r() - s.size(), std::move(edges));
}

Hypergraph union_of(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r())
    throw PreconditionError("union needs equal n and r");
  std::vector<VertexSet> edges;
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(edges));
  return Hypergraph(a.n(), a.r(), std::move(edges));
}

Hypergraph with_edges(const Hypergraph& h, std::vector<VertexSet> edges) {
  return Hypergraph(h.n(), h.r(), std::move(edges));
}

std::string to_string(const Hypergraph& h) {
  std::string s = "H(n=" + std::to_string(h.n()) + ", r=" + std::to_string(h.r()) + ") [";
  bool first = true;
  for (const auto& e : h.edges()) {
    if (!first) s += ' ';
    s += e.to_string();
    first = false;
  }
  return s + "]";
}

}  // namespace hgkit
