#include "hgkit/transversal.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hgkit {

namespace {

const VertexSet* first_uncovered(const Hypergraph& h, const VertexSet& x) {
  for (const auto& e : h.edges())
    if (!e.intersects(x)) return &e;
  return nullptr;
}

bool transversal_within(const Hypergraph& h, VertexSet& chosen, int budget) {
  const VertexSet* e = first_uncovered(h, chosen);
  if (e == nullptr) return true;
  if (budget == 0) return false;
  bool found = false;
  e->for_each([&](int v) {
    if (found) return;
    chosen.insert(v);
    if (transversal_within(h, chosen, budget - 1)) {
      found = true;
      return;
    }
    chosen.erase(v);
  });
  return found;
}

void grow(const Hypergraph& h, int t, VertexSet& selection, std::set<VertexSet>& out) {
  if (selection.size() == t) {
    out.insert(selection);
    return;
  }
  const VertexSet* witness = first_uncovered(h, selection);
  if (witness == nullptr) throw TransversalTooSmall(selection);
  witness->for_each([&](int v) {
    selection.insert(v);
    grow(h, t, selection, out);
    selection.erase(v);
  });
}

}  // namespace

bool is_transversal(const Hypergraph& h, const VertexSet& x) {
  return first_uncovered(h, x) == nullptr;
}

VertexSet minimum_transversal(const Hypergraph& h) {
  for (int budget = 0;; ++budget) {
    VertexSet chosen;
    if (transversal_within(h, chosen, budget)) return chosen;
  }
}

int tau(const Hypergraph& h) { return minimum_transversal(h).size(); }

TransversalTooSmall::TransversalTooSmall(VertexSet certificate)
    : PreconditionError("transversal number is below t: " + certificate.to_string() +
                        " already meets every edge"),
      certificate_(certificate) {}

CoveringFamily covering_family(const Hypergraph& h, int t) {
  if (t < 0 || t > h.r())
    throw PreconditionError("covering family needs 0 <= t <= r (t=" + std::to_string(t) +
                            ", r=" + std::to_string(h.r()) + ")");
  if (!is_intersecting(h)) throw PreconditionError("covering family needs an intersecting hypergraph");
  VertexSet small = minimum_transversal(h);
  if (small.size() < t) throw TransversalTooSmall(small);
  std::set<VertexSet> members;
  VertexSet selection;
  grow(h, t, selection, members);
  return CoveringFamily{t, {members.begin(), members.end()}};
}

bool covers(const CoveringFamily& f, const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
    return std::any_of(f.members.begin(), f.members.end(),
                       [&](const VertexSet& m) { return m.is_subset_of(e); });
  });
}

bool check_tau_bound(const Hypergraph& h) {
  if (!is_intersecting(h)) throw PreconditionError("transversal bound needs an intersecting hypergraph");
  const int t = tau(h);
  return BigInt(h.size()) <= power(h.r(), t) * binomial(h.n() - t, h.r() - t);
}

bool check_tau_equals_k(int n, int r, int k, const Hypergraph& h_opt) {
  if (h_opt.n() != n || h_opt.r() != r)
    throw PreconditionError("maximizer does not match (n, r) = (" + std::to_string(n) + ", " +
                            std::to_string(r) + ")");
  return tau(h_opt) == k;
}

}  // namespace hgkit
