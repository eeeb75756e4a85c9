#include "hgkit/sunflower.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "hgkit/errors.hpp"

namespace hgkit {

namespace {

constexpr std::size_t kNoTarget = std::numeric_limits<std::size_t>::max();

/// Largest family of pairwise disjoint candidates (stops once `target` is
/// reached). Candidates are visited in the given order and only strict
/// improvements replace the incumbent, so the result is the first optimum
/// in include-first DFS order.
class DisjointPacker {
 public:
  DisjointPacker(const std::vector<VertexSet>& candidates, std::size_t target)
      : cands_(candidates), target_(target) {
    width_ = cands_.empty() ? 0 : cands_.front().size();
  }

  std::vector<std::size_t> run() {
    search(0, VertexSet{});
    return best_;
  }

 private:
  void search(std::size_t from, const VertexSet& used) {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= target_) done_ = true;
    }
    for (std::size_t j = from; j < cands_.size() && !done_; ++j) {
      if (cands_[j].intersects(used)) continue;
      if (current_.size() + upper_bound(j, used) <= best_.size()) return;
      current_.push_back(j);
      search(j + 1, used | cands_[j]);
      current_.pop_back();
    }
  }

  // Petals still available from index j on: bounded by their number and,
  // when petals are non-empty, by how many fit into their free vertices.
  std::size_t upper_bound(std::size_t from, const VertexSet& used) const {
    std::size_t count = 0;
    VertexSet free_vertices;
    for (std::size_t j = from; j < cands_.size(); ++j) {
      if (cands_[j].intersects(used)) continue;
      ++count;
      free_vertices |= cands_[j];
    }
    if (width_ > 0)
      count = std::min(count, static_cast<std::size_t>(free_vertices.size() / width_));
    return count;
  }

  const std::vector<VertexSet>& cands_;
  std::size_t target_;
  int width_ = 0;
  bool done_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

bool core_key_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// The empty set plus every pairwise intersection of `edges` with size at
/// most max_size, sorted by (size, lexicographic).
std::vector<VertexSet> candidate_cores(const std::vector<VertexSet>& edges, int max_size) {
  std::vector<VertexSet> cores{VertexSet{}};
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      VertexSet y = edges[i] & edges[j];
      if (y.size() <= max_size) cores.push_back(y);
    }
  std::sort(cores.begin(), cores.end(), core_key_less);
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  return cores;
}

std::vector<VertexSet> petal_candidates(const std::vector<VertexSet>& edges, const VertexSet& core) {
  std::vector<VertexSet> out;
  for (const auto& e : edges)
    if (core.is_subset_of(e)) out.push_back(e - core);
  return out;
}

std::vector<VertexSet> pick(const std::vector<VertexSet>& from, const std::vector<std::size_t>& idx) {
  std::vector<VertexSet> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(from[i]);
  return out;
}

std::size_t saturating_petal_target(int p, int r, int exponent) {
  std::size_t m = static_cast<std::size_t>(p);
  for (int i = 0; i < exponent; ++i) {
    if (m > kNoTarget / static_cast<std::size_t>(r)) return kNoTarget;
    m *= static_cast<std::size_t>(r);
  }
  return m;
}

void check_petals(int p) {
  if (p < 1) throw PreconditionError("petal count p must be >= 1 (got " + std::to_string(p) + ")");
}

struct GreedyHit {
  VertexSet core;
  std::vector<VertexSet> petals;
};

std::optional<GreedyHit> greedy_in(const std::vector<VertexSet>& family, int p) {
  if (family.empty()) return std::nullopt;
  std::vector<VertexSet> disjoint;
  VertexSet used;
  for (const auto& e : family) {
    if (e.intersects(used)) continue;
    disjoint.push_back(e);
    used |= e;
  }
  if (disjoint.size() >= static_cast<std::size_t>(p)) return GreedyHit{VertexSet{}, disjoint};
  if (used.empty()) return std::nullopt;

  // Every edge meets `used`, so some vertex there carries at least
  // |family| / |used| edges.
  int best_vertex = -1;
  std::size_t best_degree = 0;
  used.for_each([&](int v) {
    std::size_t d = static_cast<std::size_t>(std::count_if(
        family.begin(), family.end(), [v](const VertexSet& e) { return e.contains(v); }));
    if (d > best_degree) {
      best_degree = d;
      best_vertex = v;
    }
  });
  std::vector<VertexSet> link;
  link.reserve(best_degree);
  for (const auto& e : family)
    if (e.contains(best_vertex)) {
      VertexSet rest = e;
      rest.erase(best_vertex);
      link.push_back(rest);
    }
  std::sort(link.begin(), link.end());
  auto hit = greedy_in(link, p);
  if (hit) hit->core.insert(best_vertex);
  return hit;
}

}  // namespace

Sunflower make_sunflower(const VertexSet& core, std::vector<VertexSet> petals) {
  Sunflower s{core, std::move(petals), {}};
  s.edges.reserve(s.petals.size());
  for (const auto& petal : s.petals) s.edges.push_back(core | petal);
  return s;
}

bool satisfies_invariants(const Sunflower& s) {
  if (s.petals.size() != s.edges.size() || s.petals.empty()) return false;
  for (std::size_t i = 0; i < s.petals.size(); ++i) {
    if (s.petals[i].intersects(s.core)) return false;
    if (s.edges[i] != (s.core | s.petals[i])) return false;
    for (std::size_t j = i + 1; j < s.petals.size(); ++j) {
      if (s.petals[i].intersects(s.petals[j])) return false;
      if ((s.edges[i] & s.edges[j]) != s.core) return false;
      if (s.edges[i] == s.edges[j]) return false;
    }
  }
  return true;
}

bool is_sunflower_of(const Sunflower& s, const Hypergraph& h) {
  if (!satisfies_invariants(s)) return false;
  return std::all_of(s.edges.begin(), s.edges.end(),
                     [&](const VertexSet& e) { return h.has_edge(e); });
}

std::optional<Sunflower> find_sunflower_exact(const Hypergraph& h, int p, int max_core) {
  check_petals(p);
  if (max_core < 0 || max_core > h.r())
    throw PreconditionError("max_core must lie in [0, r] (got " + std::to_string(max_core) + ")");
  std::vector<VertexSet> edges(h.edges().begin(), h.edges().end());
  for (const auto& core : candidate_cores(edges, max_core)) {
    auto cands = petal_candidates(edges, core);
    if (cands.size() < static_cast<std::size_t>(p)) continue;
    auto chosen = DisjointPacker(cands, kNoTarget).run();
    if (chosen.size() >= static_cast<std::size_t>(p)) return make_sunflower(core, pick(cands, chosen));
  }
  return std::nullopt;
}

std::optional<Sunflower> erdos_rado_greedy(const Hypergraph& h, int p) {
  check_petals(p);
  std::vector<VertexSet> family(h.edges().begin(), h.edges().end());
  auto hit = greedy_in(family, p);
  if (!hit) return std::nullopt;
  return make_sunflower(hit->core, std::move(hit->petals));
}

SmallCoreTrace extract_small_core_traced(const Hypergraph& h, int p, int k) {
  check_petals(p);
  const int r = h.r();
  if (k < 0 || k >= r)
    throw PreconditionError("small-core extraction requires 0 <= k < r (k=" + std::to_string(k) +
                            ", r=" + std::to_string(r) + ")");
  SmallCoreTrace trace;
  std::vector<VertexSet> remaining(h.edges().begin(), h.edges().end());

  // Removal phase: at each step take a sunflower of minimum available core
  // size c with exactly p * r^(c-k) petals; ties by lexicographic core.
  for (;;) {
    bool removed_one = false;
    auto cores = candidate_cores(remaining, r - 1);
    for (const auto& core : cores) {
      const int c = core.size();
      const std::size_t needed = saturating_petal_target(p, r, std::max(c - k, 0));
      auto cands = petal_candidates(remaining, core);
      if (cands.size() < needed) continue;
      auto chosen = DisjointPacker(cands, needed).run();
      if (chosen.size() < needed) continue;
      Sunflower s = make_sunflower(core, pick(cands, chosen));
      if (c <= k) {
        trace.result = std::move(s);
        return trace;
      }
      std::vector<VertexSet> kept;
      std::set_difference(remaining.begin(), remaining.end(), s.edges.begin(), s.edges.end(),
                          std::back_inserter(kept));
      remaining = std::move(kept);
      trace.removed.push_back(std::move(s));
      removed_one = true;
      break;
    }
    if (!removed_one) break;
  }

  // Recombination: among removed cores of one size s, find a core-level
  // sunflower with core Y* (|Y*| <= k) and pick one petal per member
  // sunflower disjoint from everything chosen so far.
  std::map<int, std::map<VertexSet, const Sunflower*>> by_size;
  for (const auto& s : trace.removed) by_size[s.core.size()].emplace(s.core, &s);

  for (const auto& [size, members] : by_size) {
    std::vector<VertexSet> cores;
    for (const auto& [core, _] : members) cores.push_back(core);
    if (cores.size() < 2 && p > 1) continue;
    for (const auto& inner : candidate_cores(cores, std::min(k, size - 1))) {
      std::vector<VertexSet> containing;
      for (const auto& y : cores)
        if (inner.is_subset_of(y)) containing.push_back(y);
      std::vector<VertexSet> core_petals;
      for (const auto& y : containing) core_petals.push_back(y - inner);
      auto packing = DisjointPacker(core_petals, kNoTarget).run();
      if (packing.size() < static_cast<std::size_t>(p)) continue;

      std::vector<VertexSet> petals;
      std::vector<bool> used(packing.size(), false);
      VertexSet covered;
      bool progress = true;
      while (progress && petals.size() < static_cast<std::size_t>(p)) {
        progress = false;
        for (std::size_t m = 0; m < packing.size() && !progress; ++m) {
          if (used[m]) continue;
          const VertexSet& y = containing[packing[m]];
          if ((y - inner).intersects(covered)) continue;
          const Sunflower& source = *members.at(y);
          for (const auto& petal : source.petals) {
            if (petal.intersects(covered)) continue;
            VertexSet edge = y | petal;
            petals.push_back(edge - inner);
            covered |= edge - inner;
            used[m] = true;
            progress = true;
            break;
          }
        }
      }
      if (petals.size() >= static_cast<std::size_t>(p)) {
        Sunflower s = make_sunflower(inner, std::move(petals));
        if (is_sunflower_of(s, h)) {
          trace.result = std::move(s);
          trace.recombined = true;
          return trace;
        }
      }
    }
  }
  return trace;
}

std::optional<Sunflower> extract_small_core(const Hypergraph& h, int p, int k) {
  return extract_small_core_traced(h, p, k).result;
}

}  // namespace hgkit
