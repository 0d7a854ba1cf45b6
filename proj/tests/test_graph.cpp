#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kspan/generators.hpp"
#include "kspan/graph.hpp"
#include "oracles.hpp"

using namespace kspan;

TEST(Digraph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Digraph::from_edges(3, {{1, 1}}), input_error);
  EXPECT_THROW(Digraph::from_edges(3, {{0, 3}}), input_error);
}

TEST(Digraph, DegreeSumsMatchEdgeCount) {
  Digraph d = gen_doubled_tree(9, 3, 4);
  std::size_t so = 0, si = 0;
  for (vid v = 0; v < d.n(); ++v) {
    so += d.out_degree(v);
    si += d.in_degree(v);
  }
  EXPECT_EQ(so, d.m());
  EXPECT_EQ(si, d.m());
  EXPECT_FALSE(d.simple());
}

TEST(Digraph, ParallelEdgesMergeIntoMultiplicity) {
  Digraph d = Digraph::from_edges(2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(d.mult(0, 1), 2u);
  EXPECT_EQ(d.m(), 3u);
  EXPECT_EQ(d.pair_count(), 2u);
}

TEST(ComplementMaxDegree, Examples) {
  EXPECT_EQ(complement_max_degree(fx::complete(4)), 0u);
  EXPECT_EQ(complement_max_degree(Digraph(5)), 4u);
  EXPECT_LE(complement_max_degree(gen_G(5, 5, 2, 4)), 4u);
}

TEST(ComplementMaxDegree, NeverGrowsUnderRestriction) {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    Digraph d = oracle::random_digraph(12, 0.7, rng);
    std::vector<vid> U;
    for (vid v = 0; v < 12; ++v)
      if (rng.chance(0.6)) U.push_back(v);
    if (U.empty()) continue;
    EXPECT_LE(complement_max_degree(restrict_to(d, U).graph), complement_max_degree(d));
  }
}

TEST(Restrict, Examples) {
  Digraph c = fx::cycle(5);
  EXPECT_EQ(restrict_to(c, {0, 1, 2, 3, 4}).graph, c);
  auto dk = gen_dk(2, 6);
  EXPECT_EQ(restrict_to(dk, {2, 3, 4, 5}).graph.m(), 0u);
  auto r = restrict_to(c, {3, 1, 2});
  EXPECT_EQ(r.graph, fx::path_graph(3));
  EXPECT_EQ(r.to_parent, (std::vector<vid>{1, 2, 3}));
}

TEST(ReduceToSimple, Examples) {
  Digraph d = Digraph::from_pairs(2, {{0, 1, 2}});
  Digraph s = reduce_to_simple(d);
  EXPECT_EQ(s.m(), 1u);
  EXPECT_TRUE(s.simple());
  EXPECT_EQ(reduce_to_simple(fx::cycle(4)), fx::cycle(4));
  Digraph t = gen_doubled_tree(7, 2, 5);
  EXPECT_EQ(t.m(), 24u);
  EXPECT_EQ(reduce_to_simple(t).m(), 12u);
}

TEST(OrientationReduce, Examples) {
  Digraph two = Digraph::from_edges(2, {{0, 1}, {1, 0}});
  Digraph r = orientation_reduce(two);
  EXPECT_EQ(r.m(), 1u);
  EXPECT_TRUE(r.has(0, 1));
  Digraph t = gen_power_cycle_tournament(9, 2);
  EXPECT_EQ(orientation_reduce(t), t);
  EXPECT_EQ(orientation_reduce(gen_dk(2, 6)).m(), 8u);
}

TEST(OrientationReduce, IdempotentAndKeepsUnderlyingGraph) {
  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    Digraph d = oracle::random_digraph(9, 0.5, rng);
    Digraph r = orientation_reduce(d);
    EXPECT_EQ(orientation_reduce(r), r);
    for (vid u = 0; u < 9; ++u)
      for (vid v = 0; v < 9; ++v) {
        EXPECT_EQ(d.has(u, v) || d.has(v, u), r.has(u, v) || r.has(v, u));
        EXPECT_FALSE(r.has(u, v) && r.has(v, u));
      }
  }
}

TEST(MinimalizePath, Examples) {
  Digraph t = fx::transitive(5);
  EXPECT_EQ(minimalize_path(t, {0, 1, 2, 4}), (Path{0, 4}));
  Digraph p = fx::path_graph(6);
  Path whole{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(minimalize_path(p, whole), whole);
  EXPECT_EQ(minimalize_path(p, {2, 3}), (Path{2, 3}));
  EXPECT_THROW(minimalize_path(p, {0, 2}), input_error);
}

TEST(MinimalizePath, OutputIsMinimalSubsequence) {
  Rng rng(8);
  for (int it = 0; it < 100; ++it) {
    Digraph d = oracle::random_digraph(10, 0.35, rng);
    // random walk without repeats
    Path p{static_cast<vid>(rng.below(10))};
    for (;;) {
      std::vector<vid> next;
      for (vid w : d.out(p.back()))
        if (std::find(p.begin(), p.end(), w) == p.end()) next.push_back(w);
      if (next.empty()) break;
      p.push_back(next[rng.below(next.size())]);
    }
    Path q = minimalize_path(d, p);
    EXPECT_EQ(q.front(), p.front());
    EXPECT_EQ(q.back(), p.back());
    auto at = p.begin();
    for (vid x : q) {
      at = std::find(at, p.end(), x);
      ASSERT_NE(at, p.end());
    }
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 2; j < q.size(); ++j) EXPECT_FALSE(d.has(q[i], q[j]));
  }
}

TEST(AntiDirectedTrail, Examples) {
  EXPECT_TRUE(has_anti_directed_trail(Digraph::from_edges(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}})));
  EXPECT_FALSE(has_anti_directed_trail(Digraph::from_edges(2, {{0, 1}})));
  EXPECT_TRUE(has_anti_directed_trail(Digraph::from_pairs(2, {{0, 1, 2}})));
}

TEST(AntiDirectedTrail, DenseGraphsHaveOne) {
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    Digraph d = oracle::random_digraph(8, rng.unit(), rng);
    if (d.m() >= 2 * d.n()) EXPECT_TRUE(has_anti_directed_trail(d));
    if (!has_anti_directed_trail(d)) EXPECT_LE(reduce_to_simple(d).m(), 2 * d.n() - 1);
  }
}

TEST(AntiDirectedTrail, BipartiteRepresentationSize) {
  Digraph d = gen_power_cycle_tournament(7, 0);
  EXPECT_EQ(bipartite_representation(d).size(), d.m());
}

TEST(TopDegree, Examples) {
  auto t = top_in_degree_vertices(fx::transitive(5), 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].v, 4u);
  EXPECT_EQ(t[0].count, 4u);
  EXPECT_EQ(t[1].v, 3u);
  EXPECT_EQ(t[1].count, 3u);
  auto c = top_in_degree_vertices(fx::cycle(6), 1);
  EXPECT_EQ(c[0].count, 1u);
  auto dk = top_in_degree_vertices(gen_dk(2, 6), 2);
  EXPECT_EQ(dk[0].v, 0u);
  EXPECT_EQ(dk[1].v, 1u);
  EXPECT_EQ(dk[0].count, 4u);
  EXPECT_THROW(top_in_degree_vertices(fx::cycle(3), 4), input_error);
}

TEST(TopDegree, MeetsHalfBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph d = gen_random_dense(30, 3, 1, seed).graph;
    std::size_t dbar = complement_max_degree(d);
    for (std::size_t k : {1, 3, 6}) {
      auto in = top_in_degree_vertices(d, k), out = top_out_degree_vertices(d, k);
      for (std::size_t i = 0; i < k; ++i) {
        EXPECT_GE(2 * in[i].count + k + dbar, d.n());
        EXPECT_GE(2 * out[i].count + k + dbar, d.n());
        if (i) EXPECT_LE(in[i].count, in[i - 1].count);
      }
    }
  }
}
