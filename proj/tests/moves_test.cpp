// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "vgbs/error.hpp"
#include "vgbs/generate.hpp"
#include "vgbs/graph.hpp"
#include "vgbs/jsj.hpp"

namespace vgbs {
namespace {

using test::col;
using test::make_edge;
using test::vec;

TEST(Reduce, BijectiveSideContracts) {
  GraphOfGroups g;
  g.add_vertex("u", VertexGroup::abelian(2));
  g.add_vertex("w", VertexGroup::abelian(2));
  g.add_edge(make_edge("e", "u", "w", IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 1}}));
  ReduceResult r = reduce(g);
  ASSERT_EQ(r.graph.vertices().size(), 1u);
  EXPECT_TRUE(r.graph.edges().empty());
  EXPECT_EQ(r.graph.vertices().begin()->second.rank(), 2u);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].kind, MoveKind::Reduce);
  EXPECT_EQ(abelianization(r.graph), abelianization(g));
}

TEST(Reduce, ReducedGraphIsFixed) {
  GraphOfGroups g = test::fixture("fig3.json");
  ReduceResult r = reduce(g);
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(serialize(r.graph), serialize(g));
  EXPECT_TRUE(is_reduced(g));
}

TEST(Reduce, ExpandedFig5MergesBack) {
  GraphOfGroups g = test::fixture("fig5.json");
  GraphOfGroups expanded = expand_vertex(g, "v").graph;
  ReduceResult r = reduce(expanded);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_FALSE(r.graph.has_vertex("v"));
  EXPECT_EQ(r.graph.vertex("u").rank(), 2u);
  // The loop now sits at u on the image of e.
  const Edge& loop = r.graph.edge("v.loop");
  EXPECT_EQ(loop.from, "u");
  EXPECT_EQ(loop.to, "u");
  EXPECT_EQ(loop.att_from, col({0, 1}));
  EXPECT_EQ(loop.att_to, col({0, 1}));
  EXPECT_EQ(abelianization(r.graph), abelianization(g));
}

TEST(Reduce, KeepLoopAnchorsLeavesLoopVertex) {
  GraphOfGroups g = test::fixture("fig1.json");
  GraphOfGroups expanded = expand_vertex(g, "v").graph;
  EXPECT_FALSE(is_reduced(expanded, ReduceMode::Full));
  EXPECT_TRUE(is_reduced(expanded, ReduceMode::KeepLoopAnchors));
}

TEST(Reduce, NeverAbsorbsIntoOpaque) {
  GraphOfGroups g;
  g.add_vertex("o", VertexGroup::opaque(test::fixture("fig1.json")));
  g.add_vertex("z", VertexGroup::abelian(1));
  Edge e = make_edge("e", "z", "o", col({1}), col({1, 0, 0}));
  e.anchor_to = "u";
  g.add_edge(e);
  EXPECT_TRUE(is_reduced(g));
}

TEST(Collapse11, Fig2FirstInstance) {
  GraphOfGroups g = test::fixture("fig2_k1.json");
  MoveResult m = collapse_11_loop(g, "l");
  const VertexGroup& v = m.graph.vertex("v");
  ASSERT_EQ(v.kind(), VertexKind::Polycyclic);
  EXPECT_EQ(v.polycyclic().automorphism.matrix(), IntMatrix::identity(2));
  EXPECT_TRUE(m.graph.has_edge("e"));
  EXPECT_FALSE(m.graph.has_edge("l"));
  EXPECT_EQ(m.graph.edge("e").att_to, col({1, 0}));
  EXPECT_EQ(abelianization(m.graph), abelianization(g));
}

TEST(Collapse11, KleinBottle) {
  GraphOfGroups g = test::loop_graph(IntMatrix{{-1}});
  MoveResult m = collapse_11_loop(g, "l");
  EXPECT_EQ(m.graph.vertex("v").polycyclic().automorphism.matrix(), (IntMatrix{{-1}}));
  EXPECT_EQ(abelianization(m.graph), (AbelianInvariants{1, vec({2})}));
  EXPECT_EQ(abelianization(g), abelianization(m.graph));
}

TEST(Collapse11, Heisenberg) {
  GraphOfGroups g = test::loop_graph(IntMatrix{{1, 1}, {0, 1}});
  MoveResult m = collapse_11_loop(g, "l");
  EXPECT_EQ(m.graph.vertex("v").polycyclic().automorphism.matrix(), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(abelianization(m.graph), (AbelianInvariants{2, {}}));
}

TEST(Collapse11, RejectsOtherEdges) {
  GraphOfGroups g = test::fixture("fig3.json");
  try {
    collapse_11_loop(g, "e");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOneOneLoop);
  }
}

TEST(Collapse22, Fig3) {
  GraphOfGroups g = test::fixture("fig3.json");
  Sublattice h = Sublattice::span(col({0, 1}));
  EXPECT_FALSE(check_22_witness(g, "e", h).has_value());
  MoveResult m = collapse_22_edge(g, "e", h);
  EXPECT_FALSE(m.graph.has_vertex("w"));
  const VertexGroup& v = m.graph.vertex("v");
  ASSERT_EQ(v.kind(), VertexKind::Polycyclic);
  EXPECT_EQ(v.polycyclic().automorphism.matrix(), (IntMatrix{{-1, 0}, {0, 1}}));
  const long expect[] = {3, 4, 2, 7, 3};
  for (int i = 0; i < 5; ++i) {
    const Edge& f = m.graph.edge("f" + std::to_string(i + 1));
    EXPECT_EQ(f.from, "v");
    EXPECT_EQ(f.att_from, col({0, expect[i]})) << f.id;
  }
  EXPECT_EQ(abelianization(m.graph), abelianization(g));
  EXPECT_EQ(m.record.witness["kind"], "Untwisted");
}

TEST(Collapse22, BareKleinBottle) {
  GraphOfGroups g;
  g.add_vertex("a", VertexGroup::abelian(1));
  g.add_vertex("b", VertexGroup::abelian(1));
  g.add_edge(make_edge("e", "a", "b", col({2}), col({2})));
  MoveResult m = collapse_22_edge(g, "e", Sublattice::zero(1));
  ASSERT_EQ(m.graph.vertices().size(), 1u);
  EXPECT_EQ(m.graph.vertex("a").polycyclic().automorphism.matrix(), (IntMatrix{{-1}}));
  EXPECT_EQ(abelianization(m.graph), (AbelianInvariants{1, vec({2})}));
  EXPECT_EQ(abelianization(g), abelianization(m.graph));
}

// Edge Z^2 -> <2a, b> on one side and a sheared index-two image on the other.
// The pulled-back square class is odd, so the result is the twisted group,
// whose monodromy is conjugate to the coordinate swap: coker(phi - I) is free.
TEST(Collapse22, Twisted) {
  GraphOfGroups g;
  g.add_vertex("v", VertexGroup::abelian(2));
  g.add_vertex("w", VertexGroup::abelian(2));
  g.add_edge(make_edge("e", "v", "w", IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{2, 0}, {1, 1}}));
  Sublattice h = Sublattice::span(col({0, 1}));
  ASSERT_FALSE(check_22_witness(g, "e", h).has_value());
  MoveResult m = collapse_22_edge(g, "e", h);
  EXPECT_EQ(m.record.witness["kind"], "Twisted");
  const IntMatrix& phi = m.graph.vertex("v").polycyclic().automorphism.matrix();
  EXPECT_EQ(determinant(phi), -1);
  EXPECT_EQ(phi(0, 0) + phi(1, 1), 0);
  EXPECT_EQ(abelianization(m.graph), (AbelianInvariants{2, {}}));
  EXPECT_EQ(abelianization(g), abelianization(m.graph));
}

TEST(Collapse22, WitnessRejections) {
  GraphOfGroups g = test::fixture("fig3.json");
  EXPECT_TRUE(check_22_witness(g, "e", Sublattice::span(col({1, 0}))).has_value());
  EXPECT_TRUE(check_22_witness(g, "e", Sublattice::span(col({0, 2}))).has_value());
  EXPECT_TRUE(check_22_witness(g, "f1", Sublattice::zero(1)).has_value());
  try {
    collapse_22_edge(g, "e", Sublattice::span(col({1, 0})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WitnessInvalid);
  }
}

TEST(Expand, Fig5) {
  GraphOfGroups g = test::fixture("fig5.json");
  MoveResult m = expand_vertex(g, "v");
  EXPECT_EQ(m.graph.vertex("v").rank(), 1u);
  const Edge& loop = m.graph.edge("v.loop");
  EXPECT_EQ(loop.att_from, (IntMatrix{{1}}));
  EXPECT_EQ(loop.att_to, (IntMatrix{{1}}));
  EXPECT_EQ(m.graph.edge("e").att_to, (IntMatrix{{1}}));
  EXPECT_EQ(abelianization(m.graph), abelianization(g));
}

TEST(Expand, Fig1) {
  GraphOfGroups g = test::fixture("fig1.json");
  MoveResult m = expand_vertex(g, "v");
  EXPECT_EQ(m.graph.vertex("u").rank(), 3u);
  EXPECT_EQ(m.graph.vertex("v").rank(), 1u);
  EXPECT_EQ(m.graph.edges().size(), 2u);
  EXPECT_TRUE(is_one_one_loop(m.graph, "v.loop"));
  EXPECT_EQ(modulus(m.graph, "v.loop").matrix(), (IntMatrix{{1}}));
  EXPECT_EQ(abelianization(m.graph), abelianization(g));
}

TEST(Expand, NonCoordinateHyperplane) {
  GraphOfGroups g;
  g.add_vertex("u", VertexGroup::abelian(3));
  g.add_vertex("v", VertexGroup::abelian(2));
  g.add_edge(make_edge("e", "u", "v", col({1, 0, 0}), col({1, 2})));
  MoveResult m = expand_vertex(g, "v");
  EXPECT_EQ(m.graph.edge("e").att_to, (IntMatrix{{1}}));
  EXPECT_EQ(m.record.witness["hyperplane"], matrix_to_json(col({1, 2})));
  EXPECT_EQ(modulus(m.graph, "v.loop").matrix(), (IntMatrix{{1}}));
  EXPECT_EQ(abelianization(m.graph), abelianization(g));
}

TEST(Expand, Preconditions) {
  GraphOfGroups g = test::fixture("fig3.json");
  try {
    expand_vertex(g, "p1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankTooSmall);
  }
  try {
    expand_vertex(test::fixture("fig2_k2.json"), "v");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoDeficiencyOne);
  }
}

// Every individual move on seeded graphs leaves the abelianization unchanged.
TEST(MoveInvariance, SeededCorpus) {
  std::size_t moves = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GraphOfGroups g = generate_random(corpus_params(seed));
    const AbelianInvariants base = abelianization(g);
    GraphOfGroups cur = g;
    while (auto step = reduce_step(cur)) {
      ++moves;
      ASSERT_EQ(abelianization(step->graph), base) << "seed " << seed << " reduce";
      cur = std::move(step->graph);
    }
    GraphOfGroups keep = reduce(g, ReduceMode::KeepLoopAnchors).graph;
    for (const auto& [id, e] : keep.edges()) {
      Verdict v = edge_verdict(keep, id);
      if (v.decision == Decision::UniversallyElliptic) continue;
      ++moves;
      MoveResult m = v.loop_witness ? collapse_11_loop(keep, id) : collapse_22_edge(keep, id, *v.hyperplane);
      ASSERT_EQ(abelianization(m.graph), base) << "seed " << seed << " collapse " << id;
    }
    for (const auto& site : expansion_sites(keep)) {
      ++moves;
      ASSERT_EQ(abelianization(expand_vertex(keep, site).graph), base) << "seed " << seed;
    }
  }
  EXPECT_GT(moves, 100u);
}

}  // namespace
}  // namespace vgbs
