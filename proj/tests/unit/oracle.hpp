#pragma once

// Brute-force reference implementations over plain integer vectors. Nothing
// here calls into the library's algorithms; only conversion helpers touch
// hgkit types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hgkit/hypergraph.hpp"

namespace oracle {

using Set = std::vector<int>;
using Family = std::vector<Set>;

inline Set to_set(const hgkit::VertexSet& s) { return s.members(); }

inline Family to_family(const hgkit::Hypergraph& h) {
  Family f;
  for (const auto& e : h.edges()) f.push_back(e.members());
  return f;
}

inline hgkit::Hypergraph to_hypergraph(int n, int r, const Family& f) {
  std::vector<hgkit::VertexSet> edges;
  for (const auto& s : f) edges.emplace_back(std::span<const int>(s));
  return hgkit::Hypergraph(n, r, std::move(edges));
}

inline bool contains(const Set& big, const Set& small) {
  return std::all_of(small.begin(), small.end(),
                     [&](int v) { return std::find(big.begin(), big.end(), v) != big.end(); });
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back(v);
  return out;
}

inline bool meets(const Set& a, const Set& b) { return !intersect(a, b).empty(); }

inline Set minus(const Set& a, const Set& b) {
  Set out;
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
  return out;
}

// All size-k subsets of {0..n-1} as sorted vectors, by recursive choice.
inline Family combinations(int n, int k) {
  Family out;
  Set cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && k <= n) rec(0);
  return out;
}

inline Family combinations_of(const Set& ground, int k) {
  Family out;
  for (const auto& idx : combinations(static_cast<int>(ground.size()), k)) {
    Set s;
    for (int i : idx) s.push_back(ground[static_cast<std::size_t>(i)]);
    out.push_back(s);
  }
  return out;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

inline std::size_t degree(const Family& f, const Set& s) {
  return static_cast<std::size_t>(
      std::count_if(f.begin(), f.end(), [&](const Set& e) { return contains(e, s); }));
}

inline std::size_t min_positive_codegree(const Family& f, int n, int r) {
  std::size_t best = 0;
  for (const auto& s : combinations(n, r - 1)) {
    const std::size_t d = degree(f, s);
    if (d > 0 && (best == 0 || d < best)) best = d;
  }
  return best;
}

inline bool intersecting(const Family& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!meets(f[i], f[j])) return false;
  return true;
}

inline std::size_t kernel_count(int n, int r, int k) {
  std::size_t count = 0;
  for (const auto& e : combinations(n, r)) {
    int in_x = 0;
    for (int v : e) in_x += v <= 2 * k - 2;
    count += in_x >= k;
  }
  return count;
}

inline bool is_transversal(const Family& f, const Set& x) {
  return std::all_of(f.begin(), f.end(), [&](const Set& e) { return meets(e, x); });
}

inline int tau(const Family& f, int n) {
  for (int t = 0; t <= n; ++t)
    for (const auto& x : combinations(n, t))
      if (is_transversal(f, x)) return t;
  return -1;
}

// Pairwise intersections all equal one set.
inline bool is_sunflower(const std::vector<Set>& edges) {
  if (edges.size() < 2) return !edges.empty();
  const Set core = intersect(edges[0], edges[1]);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (intersect(edges[i], edges[j]) != core) return false;
  return true;
}

// Smallest core size over all p-edge sunflowers, or -1. A lone edge counts
// with an empty core.
inline int best_sunflower_core(const Family& f, int p) {
  if (p == 1) return f.empty() ? -1 : 0;
  int best = -1;
  const int m = static_cast<int>(f.size());
  for (const auto& idx : combinations(m, p)) {
    std::vector<Set> edges;
    for (int i : idx) edges.push_back(f[static_cast<std::size_t>(i)]);
    if (!is_sunflower(edges)) continue;
    const int c = static_cast<int>(intersect(edges[0], edges[1]).size());
    if (best < 0 || c < best) best = c;
  }
  return best;
}

// Maximal intersecting families by full subset enumeration (2^C(n,r) masks).
inline std::vector<Family> maximal_intersecting(int n, int r) {
  const Family all = combinations(n, r);
  const std::size_t m = all.size();
  std::vector<std::uint64_t> conflict(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!meets(all[i], all[j])) conflict[i] |= std::uint64_t{1} << j;
  std::vector<Family> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if ((mask >> i & 1) && (conflict[i] & mask)) ok = false;
    if (!ok) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < m && maximal; ++i)
      if (!(mask >> i & 1) && !(conflict[i] & mask)) maximal = false;
    if (!maximal) continue;
    Family f;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) f.push_back(all[i]);
    out.push_back(f);
  }
  return out;
}

// Canonical key by trying every vertex permutation.
inline Family brute_canonical(const Family& f, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Family best;
  bool first = true;
  do {
    Family g;
    for (const auto& e : f) {
      Set s;
      for (int v : e) s.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(s.begin(), s.end());
      g.push_back(s);
    }
    std::sort(g.begin(), g.end());
    if (first || g < best) best = g;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// max |A|+|B| over a-uniform A, (a+1)-uniform intersecting B, cross-intersecting,
// by enumerating every intersecting B.
inline std::size_t max_cross_pair(int N, int a) {
  const Family as = combinations(N, a);
  const Family bs = combinations(N, a + 1);
  std::size_t best = 0;
  Family chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::size_t compatible = 0;
    for (const auto& s : as)
      if (std::all_of(chosen.begin(), chosen.end(), [&](const Set& b) { return meets(s, b); }))
        ++compatible;
    best = std::max(best, compatible + chosen.size());
    for (std::size_t j = from; j < bs.size(); ++j) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](const Set& b) { return meets(b, bs[j]); }))
        continue;
      chosen.push_back(bs[j]);
      rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace oracle
