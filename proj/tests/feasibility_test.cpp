#include <gtest/gtest.h>

#include "degsum/degsum.hpp"

using namespace degsum;

namespace {

FeasibilityContext plain(const Graph& g, int s) { return FeasibilityContext(g, VertexSet{}, s); }

// A random clique of g, possibly empty, drawn greedily.
VertexSet random_clique(const Graph& g, CounterRng& rng) {
  VertexSet out;
  const int want = static_cast<int>(rng.below(4));
  for (Vertex v = 0; v < g.order() && static_cast<int>(out.size()) < want; ++v) {
    const Vertex w = (v + rng.below(g.order())) % g.order();
    if (!out.contains(w) && g.neighbors(w).is_subset_of(g.vertices()) &&
        out.is_subset_of(g.neighbors(w)))
      out.insert(w);
  }
  return out;
}

VertexSet random_subset(std::size_t n, CounterRng& rng, double p = 0.5) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(p)) out.insert(v);
  return out;
}

}  // namespace

TEST(CheckFeasibleTest, Examples) {
  const Graph c6 = cycle_graph(6);
  const Graph k4 = complete_graph(4);
  const Graph k34 = complete_bipartite(3, 4);
  EXPECT_TRUE(check_feasible(plain(c6, 1), c6.vertices()));
  EXPECT_FALSE(check_feasible(plain(k4, 1), k4.vertices()));
  EXPECT_TRUE(check_feasible(plain(k34, 2), k34.vertices()));
}

TEST(CheckFeasibleTest, BoundaryPairCondition) {
  // Path 0-1-2 with X = {0, 1}: vertex 2 has degree 1 > 0, the non-adjacent
  // pair (2, 0) sums to 2 > 0, so it is (0;X)-feasible but not (1;X)-feasible.
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(check_feasible(FeasibilityContext(p3, VertexSet{0, 1}, 0), p3.vertices()));
  EXPECT_FALSE(check_feasible(FeasibilityContext(p3, VertexSet{0, 1}, 1), p3.vertices()));
}

TEST(FeasibilityContextTest, RejectsNonCliqueX) {
  EXPECT_THROW(FeasibilityContext(cycle_graph(6), VertexSet{0, 2}, 1), UsageError);
}

TEST(FindFeasibleTest, Examples) {
  const Graph c6 = cycle_graph(6);
  const DegeneracyVerdict v = find_feasible_subgraph(plain(c6, 1), c6.vertices());
  ASSERT_FALSE(v.degenerate());
  EXPECT_EQ(v.witness->vertices, c6.vertices());

  const Graph k4 = complete_graph(4);
  EXPECT_TRUE(find_feasible_subgraph(plain(k4, 2), k4.vertices()).degenerate());

  const Graph k34 = complete_bipartite(3, 4);
  EXPECT_TRUE(find_feasible_subgraph(plain(k34, 3), k34.vertices()).degenerate());
  EXPECT_TRUE(oracle_feasible_enumerate(plain(k34, 3), k34.vertices()).degenerate());
}

TEST(IsDegenerateTest, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_TRUE(is_degenerate(plain(c6, 2), c6.vertices()).degenerate());
  const DegeneracyCheck one = is_degenerate(plain(c6, 1), c6.vertices());
  EXPECT_FALSE(one.degenerate());
  EXPECT_EQ(one.reason, DegeneracyReason::kContainsWitness);

  const Graph k2 = complete_graph(2);
  for (int s = 0; s < 3; ++s) {
    const DegeneracyCheck c = is_degenerate(FeasibilityContext(k2, VertexSet{0}, s), k2.vertices());
    EXPECT_FALSE(c.degenerate());
    EXPECT_EQ(c.reason, DegeneracyReason::kComplete);
  }
}

TEST(ShrinkFeasibleTest, Examples) {
  const Graph c6 = cycle_graph(6);
  for (Vertex x = 0; x < 6; ++x) {
    const FeasibleWitness w = shrink_feasible(plain(c6, 1), {c6.vertices(), 1, {}}, x);
    EXPECT_EQ(w.level, 0);
    EXPECT_EQ(w.vertices.size(), 5u);
    EXPECT_TRUE(check_feasible(plain(c6, 0), w.vertices));
  }
  const Graph k34 = complete_bipartite(3, 4);
  const FeasibleWitness k33 = shrink_feasible(plain(k34, 2), {k34.vertices(), 2, {}}, 6);
  EXPECT_EQ(k33.vertices, (VertexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(check_feasible(plain(k34, 1), k33.vertices));
  EXPECT_THROW(shrink_feasible(plain(k34, 2), {VertexSet{0, 1}, 2, {}}, 0), UsageError);
}

TEST(FindFeasibleTest, AgreesWithExhaustiveEnumeration) {
  int degenerate = 0;
  int feasible = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    CounterRng rng(seed);
    const int n = 3 + static_cast<int>(rng.below(10));
    const Graph g = random_gnp(n, 0.2 + 0.5 * rng.uniform(), derive_seed(seed, 1));
    const VertexSet x = random_clique(g, rng);
    const int s = static_cast<int>(rng.below(5));
    const FeasibilityContext ctx(g, x, s);
    const VertexSet within = rng.bernoulli(0.7) ? g.vertices() : random_subset(g.order(), rng, 0.7);
    const DegeneracyVerdict fast = find_feasible_subgraph(ctx, within);
    const DegeneracyVerdict slow = oracle_feasible_enumerate(ctx, within);
    ASSERT_EQ(fast.degenerate(), slow.degenerate()) << write_edge_list(g) << " s=" << s;
    if (!fast.degenerate()) {
      ++feasible;
      EXPECT_TRUE(fast.witness->vertices.is_subset_of(within));
      EXPECT_TRUE(oracle_is_feasible(g, x, s, fast.witness->vertices));
    } else {
      ++degenerate;
    }
  }
  EXPECT_GT(degenerate, 50);
  EXPECT_GT(feasible, 50);
}

TEST(FeasibilityPropertyTest, DegeneracyGrowsByOneVertex) {
  // If G' is (s-1;X)-degenerate and omega(G) <= s, adding any vertex keeps it
  // (s;X)-degenerate.
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    CounterRng rng(seed);
    const int n = 5 + static_cast<int>(rng.below(6));
    const Graph g = random_gnp(n, 0.25 + 0.3 * rng.uniform(), derive_seed(seed, 1));
    const int s = std::max(2, clique_number(g));
    const VertexSet x = random_clique(g, rng);
    const VertexSet sub = random_subset(g.order(), rng, 0.6);
    if (!is_degenerate(FeasibilityContext(g, x, s - 1), sub).degenerate()) continue;
    for (Vertex extra : g.vertices() - sub) {
      ASSERT_TRUE(is_degenerate(FeasibilityContext(g, x, s), sub.with(extra)).degenerate())
          << write_edge_list(g);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(FeasibilityPropertyTest, WitnessMinusVertexDropsOneLevel) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CounterRng rng(seed);
    const Graph g = random_gnp(8 + static_cast<int>(rng.below(5)), 0.5, derive_seed(seed, 1));
    const int s = std::max(2, clique_number(g));
    const FeasibilityContext ctx(g, random_clique(g, rng), s);
    const DegeneracyVerdict v = find_feasible_subgraph(ctx, g.vertices());
    if (v.degenerate()) continue;
    for (Vertex x : v.witness->vertices) {
      const FeasibleWitness w = shrink_feasible(ctx, *v.witness, x);
      ASSERT_TRUE(oracle_is_feasible(g, ctx.clique(), s - 1, w.vertices));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(FeasibilityPropertyTest, RemovingFewVerticesKeepsDegreeBounds) {
  // sigma2 >= 2(s1+s2+1)-1, X = V_{<=s1+s2}, |U| = s_{3-i} + alpha, alpha <= 1.
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CounterRng rng(seed);
    const int s1 = 2 + static_cast<int>(rng.below(2));
    const int s2 = 2 + static_cast<int>(rng.below(2));
    const int n = 12 + static_cast<int>(rng.below(5));
    const Graph g = random_sigma2({n, 2 * (s1 + s2 + 1) - 1, false, derive_seed(seed, 1), 0.2});
    if (is_complete(g)) continue;
    const VertexSet x = low_degree_set(g, s1 + s2);
    for (int i = 1; i <= 2; ++i) {
      const int si = i == 1 ? s1 : s2;
      const int sj = i == 1 ? s2 : s1;
      for (int alpha = -1; alpha <= 1; ++alpha) {
        VertexSet u;
        while (static_cast<int>(u.size()) < sj + alpha) u.insert(rng.below(g.order()));
        const VertexSet rest = g.vertices() - u;
        const int level = si - alpha;
        for (Vertex a : rest - x) EXPECT_GT(g.degree_in(a, rest), level);
        for (Vertex a : rest - x)
          for (Vertex b : rest & x)
            if (!g.has_edge(a, b)) {
              EXPECT_GT(g.degree_in(a, rest) + g.degree_in(b, rest), 2 * level);
            }
        EXPECT_GE(static_cast<int>(rest.size()), level + 3);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(FeasibilityPropertyTest, TriangleFreeRemovalStaysFeasible) {
  // Triangle-free, sigma2 >= 2(s1+s2)-1, X = V_{<=s1+s2-1}, |U| <= 3 and every
  // outside vertex sends at most 1+alpha edges into U.
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    CounterRng rng(seed);
    const int s1 = 2 + static_cast<int>(rng.below(2));
    const int s2 = 2;
    const int n = 2 * (s1 + s2) + 2 + static_cast<int>(rng.below(4));
    Graph g;
    try {
      g = random_sigma2({n, 2 * (s1 + s2) - 1, true, derive_seed(seed, 1), 0.2});
    } catch (const GenerationFailed&) {
      continue;
    }
    const VertexSet x = low_degree_set(g, s1 + s2 - 1);
    for (int attempt = 0; attempt < 20; ++attempt) {
      VertexSet u;
      const std::size_t size = 1 + rng.below(3);
      while (u.size() < size) u.insert(rng.below(g.order()));
      int worst = 0;
      for (Vertex w : g.vertices() - u) worst = std::max(worst, static_cast<int>(g.neighbors(w).count_common(u)));
      for (int alpha = 0; alpha <= 1; ++alpha) {
        if (worst > 1 + alpha) continue;
        for (int si : {s1, s2}) {
          const DegeneracyCheck c = is_degenerate(FeasibilityContext(g, x, si - alpha), g.vertices() - u);
          ASSERT_EQ(c.reason, DegeneracyReason::kContainsWitness) << write_edge_list(g);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(MovableVertexTest, LowDegreeOffCliqueGivesCaseA) {
  // K_{5,5} has sigma2 = 10 >= 2(2+2+1)-1 and X = V_{<=4} empty. Side 1 is the
  // path 1-5-0, which peels away at level 2.
  const Graph g = complete_bipartite(5, 5);
  const VertexSet x = low_degree_set(g, 4);
  ASSERT_TRUE(x.empty());
  const PartitionState p(g, VertexSet{0, 1, 5}, 2, 2);
  ASSERT_TRUE(is_degenerate(FeasibilityContext(g, x, 2), p.side(Side::kFirst)).degenerate());
  const MovableVertex m = find_movable_vertex(p, Side::kFirst, 1, x);
  EXPECT_EQ(m.which, MoveCase::kA);
  EXPECT_EQ(m.u, m.v);
  EXPECT_EQ(m.u, 0u);
  EXPECT_LE(p.inside_degree(m.u), 2);
  EXPECT_GE(p.surplus(m.u), 1);
}

TEST(MovableVertexTest, RejectsNonDegenerateSide) {
  const Graph g = complete_bipartite(5, 5);
  const PartitionState p(g, VertexSet{0, 1, 2, 5, 6, 7}, 2, 2);
  EXPECT_THROW(find_movable_vertex(p, Side::kFirst, 1, VertexSet{}), UsageError);
  EXPECT_THROW(find_movable_vertex(p, Side::kFirst, 2, VertexSet{}), UsageError);
}

TEST(MovableVertexTest, ReturnedPairSatisfiesOneCase) {
  int case_a = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    CounterRng rng(seed);
    const int eps = static_cast<int>(rng.below(2));
    const int s1 = 2 + static_cast<int>(rng.below(2));
    const int s2 = 2 + static_cast<int>(rng.below(2));
    const int n = 9 + static_cast<int>(rng.below(4));
    const Graph g = random_sigma2({n, 2 * (s1 + s2 + eps) - 1, false, derive_seed(seed, 1), 0.15});
    const VertexSet x = low_degree_set(g, s1 + s2 + eps - 1);
    for (int attempt = 0; attempt < 30; ++attempt) {
      const PartitionState p(g, random_subset(g.order(), rng, 0.4), s1, s2);
      for (Side i : {Side::kFirst, Side::kSecond}) {
        const int si = p.s(i);
        const int sj = p.s(other(i));
        const VertexSet own = p.side(i);
        if (!is_degenerate(FeasibilityContext(g, x, si - 1 + eps), own).degenerate()) continue;
        const MovableVertex m = find_movable_vertex(p, i, eps, x);
        ASSERT_TRUE(own.contains(m.u));
        ASSERT_TRUE(own.contains(m.v));
        const VertexSet rest = g.vertices() - own;
        const int surplus = g.degree_in(m.u, rest) - g.degree_in(m.u, own);
        ASSERT_GE(surplus, sj - si + 1);
        if (m.which == MoveCase::kA) {
          ASSERT_EQ(m.u, m.v);
          ASSERT_LE(g.degree_in(m.u, own), si - 1 + eps);
          ++case_a;
        } else {
          ASSERT_TRUE(x.contains(m.v));
          ASSERT_LE(g.degree(m.v), s1 + s2 - 2);
        }
      }
    }
  }
  EXPECT_GT(case_a, 100);
}

TEST(MovableVertexTest, LowDegreeCliqueVertexGivesCaseB) {
  // K8 on {0..7} plus vertex 8 adjacent to 0 and 7: sigma2 = 9, X = {8}.
  // Side 1 is K4 on {0..3} with 8 hanging off 0. Every vertex off X has inside
  // degree >= 3, the pair (1, 8) sums to 4 <= 2*2, and 8 has one cross edge.
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = a + 1; b < 8; ++b) edges.push_back({a, b});
  edges.push_back({8, 0});
  edges.push_back({8, 7});
  const Graph g(9, edges);
  ASSERT_EQ(sigma2(g), 9);
  const VertexSet x = low_degree_set(g, 4);
  ASSERT_EQ(x, VertexSet{8});
  const PartitionState p(g, VertexSet{0, 1, 2, 3, 8}, 2, 2);
  ASSERT_TRUE(is_degenerate(FeasibilityContext(g, x, 2), p.side(Side::kFirst)).degenerate());
  const MovableVertex m = find_movable_vertex(p, Side::kFirst, 1, x);
  EXPECT_EQ(m.which, MoveCase::kB);
  EXPECT_EQ(m.v, 8u);
  EXPECT_EQ(m.u, 1u);
  EXPECT_LE(g.degree(m.v), 2);
  EXPECT_GE(p.surplus(m.u), 1);
}

TEST(DegeneracyCacheTest, MemoizesVerdicts) {
  const Graph c6 = cycle_graph(6);
  DegeneracyCache cache(c6, VertexSet{});
  EXPECT_TRUE(cache.degenerate(c6.vertices(), 2));
  EXPECT_FALSE(cache.degenerate(c6.vertices(), 1));
  EXPECT_TRUE(cache.degenerate(c6.vertices(), 2));
  EXPECT_EQ(cache.size(), 2u);
}
