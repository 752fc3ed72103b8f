#include <gtest/gtest.h>

#include "degsum/degsum.hpp"
#include "support.hpp"

using namespace degsum;

namespace {

bool passes(const ConclusionReport& r) { return r.passed(); }

bool check_named(const ConclusionReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  ADD_FAILURE() << "no check named " << name;
  return false;
}

std::string precondition_message(const std::function<void()>& body) {
  try {
    body();
  } catch (const PreconditionError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(MoveVertexTest, MoveAndBackRestoresPotential) {
  const Graph g = random_gnp(12, 0.4, 5);
  const PartitionState p(g, VertexSet{0, 2, 4, 6, 8, 10}, 2, 3);
  for (Vertex u : p.side(Side::kFirst)) {
    const PartitionState there = move_vertex(p, Side::kFirst, u);
    const PartitionState back = move_vertex(there, Side::kSecond, u);
    EXPECT_EQ(back.potential(), p.potential());
    EXPECT_EQ(back.side(Side::kFirst), p.side(Side::kFirst));
  }
}

TEST(MoveVertexTest, EqualTargetsGainWhenMostNeighborsAcross) {
  const Graph g = complete_bipartite(3, 3);
  const PartitionState p(g, VertexSet{0, 1, 3}, 2, 2);
  // Vertex 0 sees one inside neighbor (3) and two across (4, 5).
  ASSERT_GT(p.cross_degree(0), p.inside_degree(0));
  EXPECT_GT(move_vertex(p, Side::kFirst, 0).potential(), p.potential());
}

TEST(MoveVertexTest, IncrementalMatchesRecomputation) {
  const Graph c4 = cycle_graph(4);
  const PartitionState p(c4, VertexSet{0, 1}, 1, 1);
  EXPECT_EQ(p.potential(), 1 + 1 + 2 + 2);
  const PartitionState q = move_vertex(p, Side::kFirst, 1);
  EXPECT_EQ(q.potential(), q.recompute_potential());
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = random_gnp(10, 0.4, seed);
    PartitionState s(g, VertexSet{0, 1, 2, 3, 4}, 2, 3);
    CounterRng rng(seed);
    for (int step = 0; step < 20; ++step) {
      const Vertex u = rng.below(g.order());
      s.move(s.side_of(u), u);
      ASSERT_EQ(s.potential(), s.recompute_potential());
      for (Vertex v = 0; v < g.order(); ++v)
        ASSERT_EQ(s.inside_degree(v), g.degree_in(v, s.side(s.side_of(v))));
    }
  }
}

TEST(MoveVertexTest, RejectsVertexOnOtherSide) {
  const Graph c4 = cycle_graph(4);
  const PartitionState p(c4, VertexSet{0, 1}, 1, 1);
  EXPECT_THROW(move_vertex(p, Side::kFirst, 2), UsageError);
}

TEST(LargeCliqueTest, CompleteGraphSplitsIntoTwoCliques) {
  const Graph k9 = complete_graph(9);
  const auto r = handle_large_clique(k9, 2, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->h1.size(), 3u);
  EXPECT_EQ(r->h2.size(), 6u);
  EXPECT_TRUE(passes(verify_conclusion(k9, *r, Guarantee::kSigma2)));
  EXPECT_TRUE(passes(verify_conclusion(k9, *r, Guarantee::kStrong)));
}

TEST(LargeCliqueTest, TriangleFreeGraphHasNoShortcut) {
  EXPECT_FALSE(handle_large_clique(petersen_graph(), 2, 2).has_value());
}

TEST(LargeCliqueTest, CliqueGoesToSmallerTarget) {
  // Five parts of size four: omega = 5 > min(3, 4), sigma2 = 32.
  const Graph g = balanced_multipartite(5, 4);
  ASSERT_EQ(clique_number(g), 5);
  const auto r = handle_large_clique(g, 3, 4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->h1.size(), 4u);
  EXPECT_TRUE(is_clique(g, r->h1));
  EXPECT_TRUE(passes(verify_conclusion(g, *r, Guarantee::kStrong)));

  const auto swapped = handle_large_clique(g, 4, 3);
  ASSERT_TRUE(swapped.has_value());
  EXPECT_EQ(swapped->h2.size(), 4u);
  EXPECT_TRUE(is_clique(g, swapped->h2));
}

TEST(MinimalNondegenerateTest, DegenerateStartIsReturned) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(minimal_nondegenerate(FeasibilityContext(c6, {}, 2), c6.vertices()), c6.vertices());
}

TEST(MinimalNondegenerateTest, CycleShrinksOneLevel) {
  const Graph c6 = cycle_graph(6);
  const FeasibilityContext ctx(c6, {}, 1);
  const VertexSet out = minimal_nondegenerate(ctx, c6.vertices());
  EXPECT_TRUE(is_degenerate(ctx, out).degenerate());
  EXPECT_EQ(is_degenerate(ctx.at_level(0), out).reason, DegeneracyReason::kContainsWitness);
}

TEST(MinimalNondegenerateTest, RandomTriangleFreeInstances) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_sigma2({14, 9, true, seed, 0.2});
    const FeasibilityContext ctx(g, low_degree_set(g, 4), 2);
    const VertexSet out = minimal_nondegenerate(ctx, g.vertices());
    EXPECT_TRUE(is_degenerate(ctx, out).degenerate());
    EXPECT_EQ(is_degenerate(ctx.at_level(1), out).reason, DegeneracyReason::kContainsWitness);
  }
}

TEST(MinimalNondegenerateTest, RejectsCompleteStart) {
  const Graph k4 = complete_graph(4);
  EXPECT_THROW(minimal_nondegenerate(FeasibilityContext(k4, {}, 2), k4.vertices()), UsageError);
}

TEST(DecomposeGeneralTest, CompleteGraphUsesCliqueRoute) {
  const DecompositionResult r = decompose_general(complete_graph(9), 2, 2);
  EXPECT_EQ(r.route, "clique");
  EXPECT_EQ(r.mode, DecompositionMode::kGeneral);
  EXPECT_THROW(decompose_general(complete_graph(5), 2, 2), PreconditionError);
}

TEST(DecomposeGeneralTest, RandomInstancesPassVerifier) {
  int partition_routes = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto [s1, s2] = std::pair<int, int>{2 + static_cast<int>(seed % 2), 2 + static_cast<int>(seed % 3 == 0)};
    const bool tf = seed % 2 == 0;
    Graph g;
    try {
      g = random_sigma2({16, 2 * (s1 + s2 + 1) - 1, tf, seed, 0.2});
    } catch (const GenerationFailed&) {
      g = random_sigma2({16, 2 * (s1 + s2 + 1) - 1, false, seed, 0.2});
    }
    const DecompositionResult r = decompose_general(g, s1, s2);
    EXPECT_TRUE(passes(verify_conclusion(g, r, Guarantee::kSigma2))) << write_edge_list(g);
    EXPECT_TRUE(passes(verify_conclusion(g, r, Guarantee::kStrong))) << write_edge_list(g);
    EXPECT_FALSE(r.h1.intersects(r.h2));
    if (r.route == "partition") {
      ++partition_routes;
      ASSERT_TRUE(r.partition.has_value());
      EXPECT_TRUE(r.h1.is_subset_of(r.partition->first));
      EXPECT_TRUE(r.h2.is_subset_of(r.partition->second));
      EXPECT_EQ(r.partition->first | r.partition->second, g.vertices());
    }
  }
  EXPECT_GT(partition_routes, 10);
}

TEST(DecomposeGeneralTest, SharpMultipartiteIsRejected) {
  const Graph g = balanced_multipartite(4, 2);
  const std::string msg = precondition_message([&] { decompose_general(g, 4, 2); });
  EXPECT_NE(msg.find("σ₂ = 12 < 13"), std::string::npos) << msg;
}

TEST(DecomposeGeneralTest, TargetsBelowTwoAreUsageErrors) {
  EXPECT_THROW(decompose_general(complete_graph(9), 1, 2), UsageError);
  EXPECT_THROW(decompose_triangle_free(complete_bipartite(5, 5), 2, 1), UsageError);
}

TEST(DecomposeTriangleFreeTest, CycleIsRejected) {
  const std::string msg = precondition_message([] { decompose_triangle_free(cycle_graph(6), 2, 2); });
  EXPECT_NE(msg.find("σ₂ = 4 < 7"), std::string::npos) << msg;
}

TEST(DecomposeTriangleFreeTest, SharpBicliqueIsRejected) {
  const std::string msg =
      precondition_message([] { decompose_triangle_free(complete_bipartite(3, 4), 2, 2); });
  EXPECT_NE(msg.find("σ₂ = 6 < 7"), std::string::npos) << msg;
}

TEST(DecomposeTriangleFreeTest, TriangleIsNamed) {
  try {
    decompose_triangle_free(complete_graph(9), 2, 2);
    FAIL() << "expected a usage error";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("triangle (0, 1, 2)"), std::string::npos) << e.what();
  }
}

TEST(DecomposeTriangleFreeTest, RandomBipartiteInstancesPassVerifier) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_sigma2({18, 7, true, seed, 0.15});
    const DecompositionResult r = decompose_triangle_free(g, 2, 2);
    EXPECT_EQ(r.mode, DecompositionMode::kTriangleFree);
    EXPECT_TRUE(passes(verify_conclusion(g, r, Guarantee::kSigma2TriangleFree))) << write_edge_list(g);
    EXPECT_TRUE(passes(verify_conclusion(g, r, Guarantee::kStrongTriangleFree))) << write_edge_list(g);
    EXPECT_GE(r.h1.size(), 4u);
    EXPECT_GE(r.h2.size(), 4u);
  }
}

TEST(DecomposeTriangleFreeTest, MixedTargetsPassVerifier) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int s1 = 2 + static_cast<int>(seed % 2);
    const int s2 = 3;
    const Graph g = random_sigma2({20, 2 * (s1 + s2) - 1, true, seed, 0.2});
    const DecompositionResult r = decompose(g, s1, s2, DecompositionMode::kTriangleFree);
    EXPECT_TRUE(passes(verify_conclusion(g, r, Guarantee::kStrongTriangleFree))) << write_edge_list(g);
  }
}

TEST(DecomposeTriangleFreeTest, TwoVeryLowVerticesTakeLowDegreeRoute) {
  const Graph g = fixtures::low_degree_pair_graph();
  ASSERT_EQ(sigma2(g), 7);
  ASSERT_FALSE(find_triangle(g).has_value());
  const DecompositionResult r = decompose_triangle_free(g, 2, 2);
  EXPECT_EQ(r.route, "low-degree");
  EXPECT_FALSE(r.h1.contains(10) || r.h1.contains(11));
  EXPECT_FALSE(r.h2.contains(10) || r.h2.contains(11));
  EXPECT_TRUE(passes(verify_conclusion(g, r, Guarantee::kStrongTriangleFree)));
}

TEST(DecomposeTriangleFreeTest, SmallOrderIsPrecondition) {
  EXPECT_THROW(decompose_triangle_free(path_graph(2), 2, 2), PreconditionError);
}

TEST(VerifyConclusionTest, TwoTrianglesPass) {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(3));
  const ConclusionReport r = verify_conclusion(g, VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, 2, 2,
                                               Guarantee::kSigma2);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyConclusionTest, SingleEdgeFailsOrder) {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(2));
  const ConclusionReport r =
      verify_conclusion(g, VertexSet{0, 1, 2}, VertexSet{3, 4}, 2, 2, Guarantee::kSigma2);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(check_named(r, "h2.order"));
  EXPECT_TRUE(check_named(r, "h1.order"));
  EXPECT_EQ(r.failures(), std::vector<std::string>{"h2.order"});
}

TEST(VerifyConclusionTest, OverlapAndRangeAreReported) {
  const Graph g = complete_graph(6);
  const ConclusionReport overlap =
      verify_conclusion(g, VertexSet{0, 1, 2}, VertexSet{2, 3, 4}, 2, 2, Guarantee::kSigma2);
  EXPECT_FALSE(check_named(overlap, "disjoint"));
  const ConclusionReport outside =
      verify_conclusion(g, VertexSet{0, 1, 2}, VertexSet{3, 4, 9}, 2, 2, Guarantee::kSigma2);
  EXPECT_FALSE(check_named(outside, "within"));
}

TEST(VerifyConclusionTest, TriangleFreeOrderBoundIsStricter) {
  // Two 4-cycles meet |Hi| >= 2si; a 3-vertex path inside K_{3,3} does not.
  const Graph g = complete_bipartite(3, 3);
  const Graph two_c4 = disjoint_union(cycle_graph(4), cycle_graph(4));
  const ConclusionReport ok = verify_conclusion(two_c4, VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7},
                                                2, 2, Guarantee::kSigma2TriangleFree);
  EXPECT_TRUE(ok.passed());
  const ConclusionReport small = verify_conclusion(g, VertexSet{0, 3, 4}, VertexSet{1, 2, 5}, 2, 2,
                                                   Guarantee::kSigma2TriangleFree);
  EXPECT_FALSE(check_named(small, "h1.order"));
}

TEST(VerifyConclusionTest, GuaranteeSelectors) {
  EXPECT_EQ(parse_guarantee("1.3"), Guarantee::kSigma2);
  EXPECT_EQ(parse_guarantee("sigma2-tf"), Guarantee::kSigma2TriangleFree);
  EXPECT_EQ(parse_guarantee("1.5"), Guarantee::kStrong);
  EXPECT_EQ(parse_guarantee("strong-tf"), Guarantee::kStrongTriangleFree);
  EXPECT_THROW(parse_guarantee("2.0"), UsageError);
  EXPECT_STREQ(to_string(Guarantee::kStrongTriangleFree), "strong-tf");
}

TEST(CertificateTest, DecompositionRoundTrip) {
  const Graph g = random_sigma2({16, 7, true, 4, 0.2});
  const DecompositionResult r = decompose_triangle_free(g, 2, 2);
  const json j = to_json(r);
  EXPECT_EQ(j.at("schema"), "degsum.decomposition/1");
  EXPECT_EQ(j.at("mode"), "triangle_free");
  const DecompositionResult back = decomposition_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.h1, r.h1);
  EXPECT_EQ(back.h2, r.h2);
  EXPECT_EQ(back.mode, r.mode);
  EXPECT_TRUE(verify_conclusion(g, back, Guarantee::kStrongTriangleFree).passed());
  EXPECT_THROW(decomposition_from_json(json{{"h1", json::array()}}), UsageError);
}
