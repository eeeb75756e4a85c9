#include <map>
#include <set>
#include <string>

#include "hgkit/errors.hpp"
#include "hgkit/extremal.hpp"

namespace hgkit {

Hypergraph codegree_core(const Hypergraph& h, int k) {
  if (k < 1) throw PreconditionError("co-degree core needs k >= 1 (got " + std::to_string(k) + ")");
  if (h.empty() || k == 1) return h;
  std::set<VertexSet> alive(h.edges().begin(), h.edges().end());
  for (;;) {
    std::map<VertexSet, int> count;
    for (const auto& e : alive)
      e.for_each([&](int v) {
        VertexSet s = e;
        s.erase(v);
        ++count[s];
      });
    std::set<VertexSet> next;
    for (const auto& e : alive) {
      bool keep = true;
      e.for_each([&](int v) {
        VertexSet s = e;
        s.erase(v);
        if (count[s] < k) keep = false;
      });
      if (keep) next.insert(e);
    }
    if (next.size() == alive.size()) break;
    alive = std::move(next);
  }
  return with_edges(h, {alive.begin(), alive.end()});
}

}  // namespace hgkit
