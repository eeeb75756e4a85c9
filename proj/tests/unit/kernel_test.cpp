#include <gtest/gtest.h>

#include "hgkit/errors.hpp"
#include "hgkit/generators.hpp"
#include "hgkit/kernel.hpp"
#include "oracle.hpp"

using namespace hgkit;

namespace {

TEST(KernelParams, Validation) {
  EXPECT_NO_THROW((KernelParams{7, 3, 2}.validate()));
  EXPECT_THROW((KernelParams{7, 3, 0}.validate()), PreconditionError);
  EXPECT_THROW((KernelParams{7, 2, 3}.validate()), PreconditionError);
  EXPECT_THROW((KernelParams{2, 3, 1}.validate()), PreconditionError);
  EXPECT_THROW((KernelParams{4, 4, 3}.validate()), PreconditionError);
}

TEST(BuildKernel, StarForKOne) {
  Hypergraph h = build_kernel_system({7, 3, 1});
  EXPECT_EQ(h, star(7, 3, 0));
  EXPECT_EQ(h.size(), 15u);
}

TEST(BuildKernel, CompleteInsideKernel) {
  Hypergraph h = build_kernel_system({6, 3, 3});
  EXPECT_EQ(h.size(), 10u);
  EXPECT_EQ(oracle::to_family(h), oracle::combinations(5, 3));
}

TEST(BuildKernel, TwelveFourTwo) {
  Hypergraph h = build_kernel_system({12, 4, 2});
  EXPECT_EQ(h.size(), 117u);
  EXPECT_EQ(oracle::kernel_count(12, 4, 2), 117u);
}

TEST(KernelCount, Examples) {
  EXPECT_EQ(kernel_edge_count({7, 3, 2}), 13);
  EXPECT_EQ(kernel_edge_count({12, 4, 2}), 117);
  EXPECT_EQ(kernel_edge_count({7, 3, 1}), 15);
  EXPECT_THROW(kernel_edge_count({3, 3, 3}), PreconditionError);
}

TEST(KernelCount, MatchesEnumerationAndLowerTerm) {
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n = std::max(r, 2 * k - 1); n <= 14; ++n) {
        KernelParams p{n, r, k};
        const BigInt count = kernel_edge_count(p);
        EXPECT_EQ(count, BigInt(oracle::kernel_count(n, r, k))) << n << " " << r << " " << k;
        EXPECT_EQ(count, BigInt(build_kernel_system(p).size()));
        EXPECT_GE(count, binomial(2 * k - 1, k) * binomial(n - 2 * k + 1, r - k));
      }
}

TEST(KernelCount, TermsBeyondTheSummationLimitVanish) {
  for (int r = 1; r <= 6; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n = std::max(r, 2 * k - 1); n <= 16; ++n)
        for (int i = std::min(r, 2 * k - 1) + 1; i <= std::max(r, 2 * k - 1); ++i)
          EXPECT_EQ(binomial(2 * k - 1, i) * binomial(n - 2 * k + 1, r - i), 0);
}

TEST(KernelCount, LargeValuesAreExact) {
  EXPECT_EQ(kernel_edge_count({200, 100, 1}), binomial(199, 99));
}

TEST(BuildKernel, IntersectingWithCodegreeAtLeastK) {
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n = std::max(r, 2 * k - 1); n <= 14; ++n) {
        Hypergraph h = build_kernel_system({n, r, k});
        EXPECT_TRUE(is_intersecting(h));
        const bool roomy = n >= r + k - 1;
        EXPECT_EQ(min_positive_codegree(h) >= static_cast<std::size_t>(k), roomy)
            << n << " " << r << " " << k;
        auto x = kernel_cover(h, k);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(*x, kernel_set(k));
      }
}

TEST(KernelCover, Examples) {
  EXPECT_EQ(kernel_cover(build_kernel_system({10, 3, 2}), 2), (VertexSet{0, 1, 2}));
  EXPECT_EQ(kernel_cover(star(6, 3), 1), (VertexSet{0}));
  Hypergraph disjoint(6, 3, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}});
  EXPECT_FALSE(kernel_cover(disjoint, 1).has_value());
  EXPECT_THROW(kernel_cover(star(6, 3), 4), PreconditionError);
}

TEST(KernelCover, FindsRelabelledKernel) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Hypergraph h = relabel(build_kernel_system({9, 3, 2}), perm);
    auto x = kernel_cover(h, 2);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (VertexSet{perm[0], perm[1], perm[2]}));
  }
}

}  // namespace
