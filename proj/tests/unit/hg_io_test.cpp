#include <gtest/gtest.h>

#include "hgkit/counting.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/generators.hpp"
#include "hgkit/hg_io.hpp"

using namespace hgkit;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_hg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return 0;
}

TEST(HgFormat, ParsesCommentsAndBlankLines) {
  Hypergraph h = parse_hg("# fano-like\n4 2\n\n0 1\n# middle\n2 3\n");
  EXPECT_EQ(h.n(), 4);
  EXPECT_EQ(h.r(), 2);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.has_edge(VertexSet{2, 3}));
}

TEST(HgFormat, HeaderOnlyIsEmpty) {
  Hypergraph h = parse_hg("5 3\n");
  EXPECT_TRUE(h.empty());
}

TEST(HgFormat, LineNumberedErrors) {
  EXPECT_EQ(error_line("4 2\n0 1\n1 0\n"), 3u);
  EXPECT_EQ(error_line("4 2\n0 1\n# c\n0 1 2\n"), 4u);
  EXPECT_EQ(error_line("4 2\n0 4\n"), 2u);
  EXPECT_EQ(error_line("4 2\n1 1\n"), 2u);
  EXPECT_EQ(error_line("4 2\nx 1\n"), 2u);
  EXPECT_EQ(error_line("4\n"), 1u);
  EXPECT_EQ(error_line("3 4\n"), 1u);
  EXPECT_EQ(error_line("# only a comment\n"), 0u);
}

TEST(HgFormat, DuplicateMessageNamesTheEdge) {
  try {
    parse_hg("4 2\n0 1\n1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("{0,1}"), std::string::npos);
  }
}

TEST(HgFormat, RoundTripsRandomHypergraphs) {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const int r = 1 + static_cast<int>(rng() % 4);
    const int n = r + static_cast<int>(rng() % 12);
    const std::size_t m = rng() % (std::min<std::uint64_t>(binomial_u64(n, r), 25) + 1);
    Hypergraph h = random_hypergraph(n, r, m, rng);
    EXPECT_EQ(parse_hg(format_hg(h)), h);
  }
}

}  // namespace
