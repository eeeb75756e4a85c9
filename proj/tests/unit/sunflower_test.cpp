#include <gtest/gtest.h>

#include "hgkit/counting.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/extremal.hpp"
#include "hgkit/generators.hpp"
#include "hgkit/kernel.hpp"
#include "hgkit/sunflower.hpp"
#include "oracle.hpp"

using namespace hgkit;

namespace {

Hypergraph three_disjoint() {
  return Hypergraph(9, 3, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, VertexSet{6, 7, 8}});
}

void expect_valid(const std::optional<Sunflower>& s, const Hypergraph& h, int p) {
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(satisfies_invariants(*s));
  EXPECT_TRUE(is_sunflower_of(*s, h));
  EXPECT_GE(s->petal_count(), static_cast<std::size_t>(p));
  std::vector<oracle::Set> edges;
  for (const auto& e : s->edges) edges.push_back(e.members());
  EXPECT_TRUE(oracle::is_sunflower(edges));
}

TEST(Sunflower, InvariantsRejectOverlappingPetals) {
  Sunflower bad = make_sunflower(VertexSet{0}, {VertexSet{1, 2}, VertexSet{2, 3}});
  EXPECT_FALSE(satisfies_invariants(bad));
  Sunflower good = make_sunflower(VertexSet{0}, {VertexSet{1, 2}, VertexSet{3, 4}});
  EXPECT_TRUE(satisfies_invariants(good));
  EXPECT_EQ(good.edges[1], (VertexSet{0, 3, 4}));
}

TEST(ExactSunflower, Examples) {
  auto s = find_sunflower_exact(three_disjoint(), 3, 0);
  expect_valid(s, three_disjoint(), 3);
  EXPECT_TRUE(s->core.empty());

  EXPECT_FALSE(find_sunflower_exact(complete(4, 3), 3, 2).has_value());

  Hypergraph h(7, 3, {VertexSet{0, 1, 2}, VertexSet{0, 3, 4}, VertexSet{0, 5, 6}});
  auto t = find_sunflower_exact(h, 3, 1);
  expect_valid(t, h, 3);
  EXPECT_EQ(t->core, (VertexSet{0}));
  EXPECT_EQ(t->petals, (std::vector<VertexSet>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(ExactSunflower, Preconditions) {
  EXPECT_THROW(find_sunflower_exact(complete(4, 3), 0, 1), PreconditionError);
  EXPECT_THROW(find_sunflower_exact(complete(4, 3), 2, 4), PreconditionError);
}

TEST(ExactSunflower, AgreesWithSubsetOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 2);
    const int n = 5 + static_cast<int>(rng() % 6);
    const std::size_t m = 1 + rng() % std::min<std::uint64_t>(oracle::choose(n, r), 12);
    Hypergraph h = random_hypergraph(n, r, m, rng);
    const auto f = oracle::to_family(h);
    for (int p = 1; p <= 4; ++p) {
      const int best = oracle::best_sunflower_core(f, p);
      for (int max_core = 0; max_core <= r; ++max_core) {
        auto s = find_sunflower_exact(h, p, max_core);
        const bool expected = best >= 0 && best <= max_core;
        ASSERT_EQ(s.has_value(), expected) << to_string(h) << " p=" << p << " c=" << max_core;
        if (s) {
          expect_valid(s, h, p);
          EXPECT_LE(s->core.size(), max_core);
        }
      }
    }
  }
}

TEST(GreedySunflower, Examples) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Hypergraph h = random_hypergraph(8, 2, 8, rng);
    expect_valid(erdos_rado_greedy(h, 3), h, 3);
  }
  Hypergraph single(3, 3, {VertexSet{0, 1, 2}});
  auto one = erdos_rado_greedy(single, 1);
  expect_valid(one, single, 1);
  EXPECT_EQ(one->edges, (std::vector<VertexSet>{{0, 1, 2}}));

  auto two = erdos_rado_greedy(complete(4, 3), 2);
  expect_valid(two, complete(4, 3), 2);
  EXPECT_EQ(two->core.size(), 2);
}

TEST(GreedySunflower, SucceedsAtTheBound) {
  Rng rng(99);
  const std::pair<int, int> cases[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (auto [r, p] : cases) {
    const auto m = static_cast<std::size_t>(factorial(r) * power(p - 1, r));
    for (int i = 0; i < 250; ++i) {
      int n = r;
      while (binomial(n, r) < BigInt(m)) ++n;
      n += static_cast<int>(rng() % 6);
      Hypergraph h = random_hypergraph(n, r, m, rng);
      expect_valid(erdos_rado_greedy(h, p), h, p);
    }
  }
}

TEST(GreedySunflower, PairOfDisjointEdgesNeedsNoCore) {
  Hypergraph h(4, 2, {VertexSet{0, 1}, VertexSet{2, 3}});
  auto s = erdos_rado_greedy(h, 2);
  expect_valid(s, h, 2);
  EXPECT_TRUE(s->core.empty());
}

TEST(SmallCore, Examples) {
  Hypergraph st = star(9, 3);
  auto s = extract_small_core(st, 3, 1);
  expect_valid(s, st, 3);
  EXPECT_EQ(s->core, (VertexSet{0}));

  EXPECT_FALSE(extract_small_core(containing_set(9, 3, VertexSet{0, 1}), 3, 1).has_value());

  auto d = extract_small_core(three_disjoint(), 3, 0);
  expect_valid(d, three_disjoint(), 3);
  EXPECT_TRUE(d->core.empty());
}

TEST(SmallCore, Preconditions) {
  EXPECT_THROW(extract_small_core(star(9, 3), 3, 3), PreconditionError);
  EXPECT_THROW(extract_small_core(star(9, 3), 0, 1), PreconditionError);
}

TEST(SmallCore, ResultsAreAlwaysValid) {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 2);
    const int n = 6 + static_cast<int>(rng() % 5);
    Hypergraph h = random_hypergraph(n, r, 1 + rng() % std::min<std::uint64_t>(oracle::choose(n, r), 25), rng);
    for (int p = 1; p <= 3; ++p)
      for (int k = 0; k < r; ++k) {
        auto s = extract_small_core(h, p, k);
        if (!s) continue;
        expect_valid(s, h, p);
        EXPECT_LE(s->core.size(), k);
      }
  }
}

TEST(SmallCore, TraceRecordsRemovedSunflowers) {
  Hypergraph h = containing_set(8, 3, VertexSet{0, 1});
  SmallCoreTrace trace = extract_small_core_traced(h, 2, 1);
  EXPECT_FALSE(trace.result.has_value());
  ASSERT_FALSE(trace.removed.empty());
  for (const auto& s : trace.removed) {
    EXPECT_TRUE(satisfies_invariants(s));
    EXPECT_EQ(s.core, (VertexSet{0, 1}));
  }
}

TEST(Sharpness, FixedPairDefeatsAllFinders) {
  for (int n = 6; n <= 10; ++n) {
    Hypergraph h = containing_set(n, 3, VertexSet{0, 1});
    for (int p = 2; p <= 5; ++p) {
      EXPECT_FALSE(find_sunflower_exact(h, p, 1).has_value());
      auto g = erdos_rado_greedy(h, p);
      if (g) EXPECT_GE(g->core.size(), 2);
      EXPECT_FALSE(extract_small_core(h, p, 1).has_value());
    }
  }
}

TEST(LargeSunflowers, CoreAtLeastCodegree) {
  std::vector<Hypergraph> corpus;
  for (int r = 2; r <= 3; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n = std::max(r, 2 * k - 1); n <= 10; ++n) corpus.push_back(build_kernel_system({n, r, k}));
  Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const int r = 2 + i % 2;
    Hypergraph h = random_intersecting(r + 2 + static_cast<int>(rng() % 5), r, rng);
    Hypergraph core = codegree_core(h, 1 + static_cast<int>(rng() % r));
    if (!core.empty()) corpus.push_back(core);
  }
  for (const auto& h : corpus) {
    ASSERT_TRUE(is_intersecting(h));
    const auto k = min_positive_codegree(h);
    auto s = find_sunflower_exact(h, h.r() + 1, h.r());
    if (s) EXPECT_GE(s->core.size(), k) << to_string(h);
    EXPECT_FALSE(find_sunflower_exact(h, h.r() + 1, static_cast<int>(k) - 1).has_value());
  }
}

}  // namespace
