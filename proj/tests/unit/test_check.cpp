#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "rvc/check.hpp"
#include "rvc/errors.hpp"
#include "rvc/harness.hpp"

using namespace rvc;

namespace {

ColoredGraph colored(const Graph& g, std::vector<Color> c) {
  const int k = c.empty() ? 0 : *std::max_element(c.begin(), c.end());
  return ColoredGraph(g, Coloring(k, std::move(c)));
}

}  // namespace

TEST(IsRainbowPath, Examples) {
  const Graph p4 = path_graph(4);
  EXPECT_TRUE(is_rainbow_path(colored(p4, {1, 1, 1, 1}), Path{{1, 2}}));
  EXPECT_FALSE(is_rainbow_path(colored(p4, {1, 1, 1, 1}), Path{{1, 2, 3, 4}}));
  EXPECT_TRUE(is_rainbow_path(colored(p4, {1, 1, 2, 1}), Path{{1, 2, 3, 4}}));
  EXPECT_TRUE(is_rainbow_path(colored(p4, {1, 1, 1, 1}), Path{{2}}));
}

TEST(IsRainbowPath, RejectsNonPaths) {
  const ColoredGraph cg = colored(path_graph(4), {1, 2, 3, 4});
  EXPECT_THROW(is_rainbow_path(cg, Path{{1, 3}}), InvalidInput);
  EXPECT_THROW(is_rainbow_path(cg, Path{{1, 2, 1}}), InvalidInput);
  EXPECT_THROW(is_rainbow_path(cg, Path{{1, 5}}), InvalidInput);
}

TEST(IsRainbowPath, UncoloredVertexCannotBeInternal) {
  const ColoredGraph cg(path_graph(3), Coloring::uncolored(3));
  EXPECT_TRUE(is_rainbow_path(cg, Path{{1, 2}}));
  EXPECT_FALSE(is_rainbow_path(cg, Path{{1, 2, 3}}));
}

TEST(FindRainbowPath, Examples) {
  const Graph p4 = path_graph(4);
  EXPECT_FALSE(find_rainbow_path(colored(p4, {1, 1, 1, 1}), 1, 4).holds);
  const auto v = find_rainbow_path(colored(p4, {1, 1, 2, 1}), 1, 4);
  ASSERT_TRUE(v.holds);
  EXPECT_EQ(v.witness->vertices, (std::vector<Vertex>{1, 2, 3, 4}));
  const ColoredGraph c5(cycle_graph(5), Coloring::uniform(5));
  for (Vertex s = 1; s <= 5; ++s)
    for (Vertex t = 1; t <= 5; ++t)
      if (s != t) EXPECT_TRUE(find_rainbow_path(c5, s, t).holds);
}

TEST(FindRainbowPath, Errors) {
  const ColoredGraph cg = colored(path_graph(3), {1, 1, 1});
  EXPECT_THROW(find_rainbow_path(cg, 2, 2), InvalidInput);
  EXPECT_THROW(find_rainbow_path(cg, 1, 4), InvalidInput);
  EXPECT_THROW(find_rainbow_path(colored(build_graph(4, {{1, 2}, {3, 4}}), {1, 1, 1, 1}), 1, 2), InvalidInput);
}

TEST(FindRainbowPath, ShortestThenLexicographic) {
  // Two 3-edge routes 1-2-4-6 and 1-3-5-6; the first is monochromatic inside.
  const Graph g = build_graph(6, {{1, 2}, {2, 4}, {4, 6}, {1, 3}, {3, 5}, {5, 6}});
  EXPECT_EQ(find_rainbow_path(colored(g, {1, 1, 1, 1, 2, 1}), 1, 6).witness->vertices,
            (std::vector<Vertex>{1, 3, 5, 6}));
  EXPECT_EQ(find_rainbow_path(colored(g, {1, 1, 2, 2, 1, 1}), 1, 6).witness->vertices,
            (std::vector<Vertex>{1, 2, 4, 6}));
}

TEST(FindRainbowPath, PaletteLimit) {
  std::vector<Color> c(70);
  std::iota(c.begin(), c.end(), 1);
  EXPECT_THROW(find_rainbow_path(colored(path_graph(70), c), 1, 70), SizeLimitError);
}

TEST(CheckWhole, Examples) {
  EXPECT_TRUE(check_rainbow_vertex_connected(colored(complete_graph(5), {1, 1, 1, 1, 1})).holds);
  const auto mono = check_rainbow_vertex_connected(ColoredGraph(cycle_graph(6), Coloring::uniform(6)));
  EXPECT_FALSE(mono.holds);
  EXPECT_EQ(mono.failing_pair, (VertexPair{1, 4}));
  EXPECT_TRUE(check_rainbow_vertex_connected(colored(cycle_graph(6), {1, 2, 1, 2, 1, 2})).holds);
  EXPECT_TRUE(check_rainbow_vertex_connected(ColoredGraph(complete_graph(3), Coloring::uncolored(3))).holds);
  EXPECT_FALSE(check_rainbow_vertex_connected(ColoredGraph(path_graph(3), Coloring::uncolored(3))).holds);
  EXPECT_TRUE(check_rainbow_vertex_connected(ColoredGraph(build_graph(1, {}), Coloring::uniform(1))).holds);
}

TEST(CheckPairs, Examples) {
  const ColoredGraph cg = colored(path_graph(4), {1, 1, 1, 1});
  EXPECT_TRUE(check_pairs(cg, PairSet{}).holds);
  EXPECT_TRUE(check_pairs(cg, PairSet({{1, 3}})).holds);
  const auto v = check_pairs(cg, PairSet({{1, 3}, {4, 1}}));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.failing_pair, (VertexPair{1, 4}));
  EXPECT_THROW(PairSet({{2, 2}}), InvalidInput);
}

TEST(NaiveCheck, Examples) {
  EXPECT_TRUE(naive_all_paths_check(colored(complete_graph(4), {1, 1, 2, 2}), 1, 3).holds);
  EXPECT_FALSE(naive_all_paths_check(colored(path_graph(4), {1, 2, 2, 1}), 1, 4).holds);
  EXPECT_TRUE(naive_all_paths_check(colored(cycle_graph(6), {1, 2, 1, 2, 1, 2}), 1, 4).holds);
  EXPECT_THROW(naive_all_paths_check(ColoredGraph(path_graph(11), Coloring::uniform(11)), 1, 2), SizeLimitError);
}

// Depth-bounded state search against plain DFS over simple paths, and the
// library's naive checker against the same DFS.
TEST(CheckProperty, SearchMatchesDfsOracle) {
  oracle::Rng rng(1);
  for (int iter = 0; iter < 1500; ++iter) {
    const int n = rng.uniform(2, 7);
    const int k = rng.uniform(1, 4);
    const Graph g = oracle::random_connected_graph(rng, n, rng.uniform(0, 4) / 10.0);
    const auto colors = oracle::random_colors(rng, n, k);
    const ColoredGraph cg(g, Coloring(k, colors));
    for (Vertex s = 1; s <= n; ++s) {
      for (Vertex t = s + 1; t <= n; ++t) {
        const bool expected = oracle::rainbow_pair(g, colors, s, t);
        const auto fast = find_rainbow_path(cg, s, t);
        ASSERT_EQ(fast.holds, expected) << describe(g);
        ASSERT_EQ(naive_all_paths_check(cg, s, t).holds, expected) << describe(g);
        if (fast.holds) {
          ASSERT_TRUE(is_rainbow_path(cg, *fast.witness));
          ASSERT_LE(fast.witness->length(), k + 1);
          ASSERT_EQ(fast.witness->vertices, naive_all_paths_check(cg, s, t).witness->vertices);
        }
      }
    }
    ASSERT_EQ(check_rainbow_vertex_connected(cg).holds, oracle::rainbow_connected(g, colors));
  }
}

TEST(CheckProperty, PaletteRelabelingInvariance) {
  oracle::Rng rng(2);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = rng.uniform(2, 7);
    const int k = rng.uniform(1, 4);
    const Graph g = oracle::random_connected_graph(rng, n, 0.25);
    const auto colors = oracle::random_colors(rng, n, k);
    std::vector<Color> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<Color> renamed;
    for (Color c : colors) renamed.push_back(perm[static_cast<std::size_t>(c) - 1]);
    const ColoredGraph a(g, Coloring(k, colors)), b(g, Coloring(k, renamed));
    const auto va = check_rainbow_vertex_connected(a), vb = check_rainbow_vertex_connected(b);
    ASSERT_EQ(va.holds, vb.holds);
    ASSERT_EQ(va.failing_pair, vb.failing_pair);
    for (Vertex s = 1; s <= n; ++s)
      for (Vertex t = s + 1; t <= n; ++t) ASSERT_EQ(find_rainbow_path(a, s, t).holds, find_rainbow_path(b, s, t).holds);
  }
}

// Splitting a color class into fresh colors never destroys a rainbow path.
TEST(CheckProperty, RefinementMonotonicity) {
  oracle::Rng rng(4);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = rng.uniform(3, 7);
    const int k = rng.uniform(1, 3);
    const Graph g = oracle::random_connected_graph(rng, n, 0.2);
    const auto colors = oracle::random_colors(rng, n, k);
    const Color split = rng.uniform(1, k);
    std::vector<Color> refined = colors;
    int fresh = k;
    for (auto& c : refined)
      if (c == split && rng.coin()) c = ++fresh;
    const ColoredGraph a(g, Coloring(k, colors)), b(g, Coloring(fresh, refined));
    for (Vertex s = 1; s <= n; ++s)
      for (Vertex t = s + 1; t <= n; ++t)
        if (find_rainbow_path(a, s, t).holds) ASSERT_TRUE(find_rainbow_path(b, s, t).holds);
  }
}

TEST(CheckProperty, DistanceTwoAlwaysConnectedAndDistinctColorsSuffice) {
  for (int n = 2; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      const ColoredGraph mono(g, Coloring::uniform(n));
      const DistanceTable d(g);
      for (Vertex s = 1; s <= n; ++s)
        for (Vertex t = s + 1; t <= n; ++t)
          if (d(s, t) <= 2) ASSERT_TRUE(find_rainbow_path(mono, s, t).holds);
      std::vector<Color> distinct(static_cast<std::size_t>(n));
      std::iota(distinct.begin(), distinct.end(), 1);
      ASSERT_TRUE(check_rainbow_vertex_connected(ColoredGraph(g, Coloring(n, distinct))).holds);
    });
  }
}

TEST(CheckProperty, AllPairsSubsetMatchesWhole) {
  oracle::Rng rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = rng.uniform(2, 7);
    const Graph g = oracle::random_connected_graph(rng, n, 0.2);
    const ColoredGraph cg(g, Coloring(2, oracle::random_colors(rng, n, 2)));
    const auto whole = check_rainbow_vertex_connected(cg);
    const auto pairs = check_pairs(cg, PairSet::all_pairs(n));
    ASSERT_EQ(whole.holds, pairs.holds);
    ASSERT_EQ(whole.failing_pair, pairs.failing_pair);
  }
}
