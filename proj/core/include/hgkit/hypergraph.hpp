#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hgkit/vertex_set.hpp"

namespace hgkit {

/// An r-uniform hypergraph on the vertex set [0, n).
///
/// Edges are kept sorted in VertexSet order and are pairwise distinct, so two
/// hypergraphs compare equal exactly when their edge sets are equal. Values
/// are immutable after construction.
class Hypergraph {
 public:
  /// The empty r-uniform hypergraph on [0, n).
  Hypergraph(int n, int r);

  /// Throws PreconditionError if an edge has the wrong size, a vertex is out
  /// of range, or an edge is repeated.
  Hypergraph(int n, int r, std::vector<VertexSet> edges);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const VertexSet> edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }

  bool has_edge(const VertexSet& e) const;

  /// The vertex set [0, n) as a VertexSet.
  VertexSet universe() const { return VertexSet::range(0, n_); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int r_;
  std::vector<VertexSet> edges_;
};

/// Number of edges containing S. Throws if S has a member >= n.
std::size_t degree(const Hypergraph& h, const VertexSet& s);

/// Minimum over the shadow of the number of edges containing each
/// (r-1)-set; 0 for the empty hypergraph.
std::size_t min_positive_codegree(const Hypergraph& h);

bool is_intersecting(const Hypergraph& h);

/// Every edge of `a` meets every edge of `b`. The two must share n.
bool are_cross_intersecting(const Hypergraph& a, const Hypergraph& b);

/// All (r-1)-sets contained in some edge, sorted.
std::vector<VertexSet> shadow(const Hypergraph& h);

/// {h \ S : h in E(H), h ∩ T = S} as an (r-|S|)-uniform hypergraph on the
/// same universe. Requires S ⊆ T and |S| <= r.
Hypergraph derived(const Hypergraph& h, const VertexSet& t, const VertexSet& s);

/// Edge-set union of two hypergraphs with equal n and r.
Hypergraph union_of(const Hypergraph& a, const Hypergraph& b);

/// A hypergraph with the same n and r as `h` and the given edges.
Hypergraph with_edges(const Hypergraph& h, std::vector<VertexSet> edges);

std::string to_string(const Hypergraph& h);

}  // namespace hgkit
