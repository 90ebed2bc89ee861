#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rvc/errors.hpp"
#include "rvc/harness.hpp"
#include "rvc/reductions.hpp"

using namespace rvc;

namespace {

void expect_every_vertex_named(const ReductionCertificate& cert, int order) {
  cert.validate();
  ASSERT_EQ(static_cast<int>(cert.roles.size()), order);
  for (Vertex v = 1; v <= order; ++v) EXPECT_TRUE(cert.label_of(v).has_value()) << v;
}

}  // namespace

TEST(StToGlobal, Shape) {
  const Graph c4 = cycle_graph(4);
  const auto out = st_to_global(ColoredGraph(c4, Coloring(2, {1, 2, 1, 2})), 1, 3);
  const Graph& h = out.gadget.graph();
  EXPECT_EQ(h.order(), 8);
  EXPECT_EQ(h.size(), 4 + 2 + 2 * 4);
  EXPECT_EQ(out.gadget.coloring().palette_size(), 4);
  const auto& cert = out.certificate;
  EXPECT_EQ(cert.role("s"), 1);
  EXPECT_EQ(cert.role("t"), 3);
  EXPECT_EQ(cert.role("s'"), 5);
  EXPECT_EQ(cert.role("b"), 8);
  EXPECT_EQ(cert.color("c_1"), 3);
  EXPECT_EQ(cert.color("c_2"), 4);
  EXPECT_EQ(out.gadget.coloring()[1], 3);
  EXPECT_EQ(out.gadget.coloring()[3], 4);
  EXPECT_EQ(out.gadget.coloring()[2], 2);
  EXPECT_TRUE(h.adjacent(1, 5));
  EXPECT_TRUE(h.adjacent(3, 6));
  expect_every_vertex_named(cert, 8);
}

TEST(StToGlobal, PreservesAnswerOnPath) {
  const Graph p4 = path_graph(4);
  const ColoredGraph good(p4, Coloring(2, {1, 1, 2, 1}));
  const ColoredGraph bad(p4, Coloring(2, {1, 2, 2, 1}));
  EXPECT_TRUE(check_rainbow_vertex_connected(st_to_global(good, 1, 4).gadget).holds);
  EXPECT_FALSE(check_rainbow_vertex_connected(st_to_global(bad, 1, 4).gadget).holds);
}

TEST(StToGlobal, Errors) {
  const ColoredGraph cg(path_graph(3), Coloring::uniform(3));
  EXPECT_THROW(st_to_global(cg, 2, 2), InvalidInput);
  EXPECT_THROW(st_to_global(cg, 1, 4), InvalidInput);
  EXPECT_THROW(st_to_global(ColoredGraph(path_graph(3), Coloring::uncolored(3)), 1, 3), InvalidInput);
}

TEST(SatToSt, SharedColorsAndDecode) {
  const auto f = make_formula(3, {{1, 2, -3}, {-1, -2, 3}});
  const auto out = sat_to_st(f);
  const auto& cert = out.certificate;
  EXPECT_EQ(out.gadget.graph().order(), 8);
  EXPECT_EQ(out.gadget.coloring().palette_size(), 4);
  EXPECT_EQ(out.s, 1);
  EXPECT_EQ(out.t, 8);
  for (int j = 1; j <= 3; ++j) {
    const auto label = std::to_string(j) + "_{1,1}";
    EXPECT_EQ(out.gadget.coloring()[cert.role("v^" + label)], out.gadget.coloring()[cert.role("vbar^" + label)]);
    EXPECT_EQ(out.gadget.coloring()[cert.role("v^" + label)], cert.color("alpha^" + label));
  }
  expect_every_vertex_named(cert, 8);

  const Path q{{out.s, cert.role("v^1_{1,1}"), cert.role("v^3_{1,1}"), out.t}};
  ASSERT_TRUE(is_rainbow_path(out.gadget, q));
  EXPECT_EQ(decode_st_witness(cert, q), Assignment({true, false, true}));

  const auto found = find_rainbow_path(out.gadget, out.s, out.t);
  ASSERT_TRUE(found.holds);
  EXPECT_TRUE(evaluate(f, decode_st_witness(cert, *found.witness)));
}

TEST(SatToSt, DecodeRejectsBadPaths) {
  const auto out = sat_to_st(make_formula(1, {{1}, {-1}}));
  const auto& cert = out.certificate;
  // The only s-t route repeats alpha^1_{1,1}.
  EXPECT_FALSE(find_rainbow_path(out.gadget, out.s, out.t).holds);
  const Path q{{out.s, cert.role("v^1_{1,1}"), cert.role("vbar^1_{1,1}"), out.t}};
  EXPECT_THROW(decode_st_witness(cert, q), InvalidInput);
  EXPECT_THROW(decode_st_witness(cert, Path{{out.s, out.t}}), InvalidInput);
}

TEST(SatToSt, RejectsOneSidedVariables) {
  EXPECT_THROW(sat_to_st(make_formula(2, {{1, 2}, {-1, 2}})), InvalidInput);
}

TEST(SubsetToRvc2, TriangleWithAllPairs) {
  const auto out = subset_to_rvc2(complete_graph(3), PairSet::all_pairs(3));
  EXPECT_EQ(out.gadget.order(), 8);
  EXPECT_EQ(out.gadget.size(), 3 + 3 * 3);
  expect_every_vertex_named(out.certificate, 8);
  const Coloring c = extend_subset_witness(complete_graph(3), PairSet::all_pairs(3), Coloring::uniform(3));
  EXPECT_TRUE(check_rainbow_vertex_connected(ColoredGraph(out.gadget, c)).holds);
}

TEST(SubsetToRvc2, ComplementPairsGetGadgets) {
  const Graph p4 = path_graph(4);
  const PairSet p({{1, 4}});
  const auto out = subset_to_rvc2(p4, p);
  EXPECT_EQ(out.gadget.order(), 4 + 4 + 2 * 5 + 2);
  EXPECT_EQ(out.certificate.role("x1_{(1,2)}"), 9);
  EXPECT_EQ(out.certificate.role("x2_{(3,4)}"), 18);
  const auto verdict = decide_subset_rvc2(p4, p);
  ASSERT_TRUE(verdict.holds);
  EXPECT_TRUE(check_rainbow_vertex_connected(ColoredGraph(out.gadget, extend_subset_witness(p4, p, *verdict.witness))).holds);
}

TEST(DiffpairsToSubset, Triangle) {
  const auto out = diffpairs_to_subset(complete_graph(3), Pairing({1}, {2}));
  EXPECT_EQ(out.gadget.order(), 10);
  EXPECT_EQ(out.gadget.size(), 3 + 9);
  EXPECT_EQ(out.pairs.size(), 8u);
  expect_every_vertex_named(out.certificate, 10);
  EXPECT_EQ(out.certificate.role("x^3_{(1,2)}"), 6);
  const Coloring c = extend_diffpairs_witness(complete_graph(3), Pairing({1}, {2}), Coloring(2, {1, 2, 1}));
  EXPECT_TRUE(check_pairs(ColoredGraph(out.gadget, c), out.pairs).holds);
  EXPECT_THROW(diffpairs_to_subset(complete_graph(3), Pairing{}), InvalidInput);
}

TEST(SatToDiffpairs, SingleClause) {
  const auto f = make_formula(3, {{1, -2, 3}});
  const auto out = sat_to_diffpairs(f);
  EXPECT_EQ(out.gadget.order(), 9);
  EXPECT_EQ(out.gadget.size(), 0 + 6 + 3 + 1);
  EXPECT_EQ(out.pairing.size(), 3u);
  expect_every_vertex_named(out.certificate, 9);
  const auto verdict = decide_diffpairs_rvc2(out.gadget, out.pairing);
  ASSERT_TRUE(verdict.holds);
  const Assignment a = decode_diffpairs_witness(out.certificate, *verdict.witness);
  EXPECT_TRUE(evaluate(f, a));
  std::vector<Color> flipped;
  for (Color c : verdict.witness->colors()) flipped.push_back(3 - c);
  EXPECT_EQ(decode_diffpairs_witness(out.certificate, Coloring(2, flipped)), a);
}

TEST(SatToDiffpairs, ClauseClique) {
  const auto out = sat_to_diffpairs(make_formula(3, {{1, 2, 3}, {-1, 2, 3}, {1, -2, -3}}));
  for (Vertex i = 1; i <= 3; ++i)
    for (Vertex j = i + 1; j <= 3; ++j) EXPECT_TRUE(out.gadget.adjacent(i, j));
  EXPECT_EQ(out.gadget.size(), 3 + 6 + 9 + 1);
}

TEST(SatToDiffpairs, UnsatisfiableFormula) {
  const auto out = sat_to_diffpairs(all_sign_patterns_formula());
  EXPECT_FALSE(decide_diffpairs_rvc2(out.gadget, out.pairing).holds);
  EXPECT_THROW(sat_to_diffpairs(CnfFormula(2, {})), InvalidInput);
}

TEST(SatToDiffpairs, DecodeRejectsViolatedPairs) {
  const auto out = sat_to_diffpairs(make_formula(1, {{1}}));
  EXPECT_THROW(decode_diffpairs_witness(out.certificate, Coloring::uniform(out.gadget.order())), InvalidInput);
}

// Every reduction on random inputs yields a fully named gadget whose
// certificate survives a text round trip.
TEST(ReductionProperty, CertificatesNameEveryVertex) {
  oracle::Rng rng(21);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = rng.uniform(2, 6);
    const Graph g = oracle::random_connected_graph(rng, n, 0.3);
    const ColoredGraph cg(g, Coloring(2, oracle::random_colors(rng, n, 2)));
    const auto a = st_to_global(cg, 1, n);
    expect_every_vertex_named(a.certificate, a.gadget.graph().order());
    const auto b = subset_to_rvc2(g, PairSet({{1, n}}));
    expect_every_vertex_named(b.certificate, b.gadget.order());
    const auto c = diffpairs_to_subset(g, Pairing({1}, {n}));
    expect_every_vertex_named(c.certificate, c.gadget.order());
    ASSERT_EQ(parse_certificate(serialize_certificate(c.certificate)), c.certificate);
  }
}
