#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kspan/dominance.hpp"
#include "kspan/generators.hpp"

using namespace kspan;

namespace {

TrioParams small_params() {
  TrioParams p;
  p.t1 = 1;
  p.t2 = 1;
  p.d = 30;
  p.m = 5;
  p.u = Rational(7, 3);
  p.k = 1;
  return p;
}

bool names(const TrioReport& r, const std::string& prefix) {
  for (const auto& f : r.failures)
    if (f.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(Dominator, CycleExample) {
  Digraph c = fx::cycle(7);
  Dominator a = find_indominator(c, 3);
  EXPECT_EQ(a.members, (std::vector<vid>{3, 4}));
  EXPECT_EQ(a.end(), 4u);
  EXPECT_TRUE(a.U.empty());
  EXPECT_TRUE(is_dominator(c, a, 5));
  Dominator b = find_outdominator(c, 3);
  EXPECT_EQ(b.members, (std::vector<vid>{3, 2}));
  EXPECT_TRUE(is_dominator(c, b, 5));
}

TEST(Dominator, TransitiveSourcePicksSink) {
  Digraph t = fx::transitive(6);
  Dominator a = find_indominator(t, 0);
  EXPECT_EQ(a.members, (std::vector<vid>{0, 5}));
  EXPECT_TRUE(a.U.empty());
  Dominator b = find_outdominator(t, 5);
  EXPECT_EQ(b.members, (std::vector<vid>{5, 0}));
}

TEST(Dominator, NoOutNeighbours) {
  Digraph t = fx::transitive(4);
  Dominator a = find_indominator(t, 3);
  EXPECT_EQ(a.members, (std::vector<vid>{3}));
  EXPECT_TRUE(a.U.empty());
  EXPECT_TRUE(is_dominator(t, a, 5));
}

TEST(Dominator, RandomGraphsSatisfyBothConditions) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph d = gen_random_dense(40, seed % 4, 1, seed, {0.3}).graph;
    for (vid x = 0; x < 40; x += 7) {
      Dominator a = find_indominator(d, x), b = find_outdominator(d, x);
      EXPECT_TRUE(is_dominator(d, a, 5));
      EXPECT_TRUE(is_dominator(d, b, 5));
      EXPECT_LE(a.members.size(), 5u);
      // ID2 numerically: |N+(x)| >= 16 |U+|
      EXPECT_GE(d.out_degree(x), 16 * a.U.size());
      EXPECT_GE(d.in_degree(x), 16 * b.U.size());
    }
  }
}

TEST(Trio, RandomTournamentPassesVerification) {
  Digraph d = gen_random_tournament(60, 1, 5).graph;
  Trio T = build_trio(d, small_params());
  TrioReport r = verify_trio(d, T, 1);
  EXPECT_TRUE(r.ok) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_LE(T.A.size(), 25u);
  EXPECT_LE(T.B.size(), 25u);
  // semicomplete: |O*| <= 2mu/t1
  EXPECT_LE(Rational(static_cast<std::int64_t>(T.O_star.size())), Rational(2 * 5) * Rational(7, 3));
}

TEST(Trio, VerifiesAcrossSeedsAndDensities) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::size_t dbar = seed % 3, k = 1 + seed % 2, s = k + dbar;
    TrioParams p;
    p.t1 = s;
    p.t2 = std::max<std::size_t>(1, dbar);
    p.d = 30 * k + 35 * dbar;
    p.m = 5 * s;
    p.u = Rational(static_cast<std::int64_t>(7 * s), 3);
    p.k = k;
    p.delta_bar = dbar;
    Digraph d = gen_random_dense(10 * p.m + 20, dbar, k, seed).graph;
    p.delta_bar = complement_max_degree(d);
    Trio T = build_trio(d, p);
    TrioReport r = verify_trio(d, T, k);
    EXPECT_TRUE(r.ok) << "seed " << seed << ": " << (r.failures.empty() ? "" : r.failures[0]);
  }
}

TEST(Trio, RejectsSmallGraphs) {
  EXPECT_THROW(build_trio(gen_random_tournament(49, 1, 0).graph, small_params()), input_error);
  TrioParams p = small_params();
  p.u = Rational(1);
  EXPECT_THROW(build_trio(gen_random_tournament(60, 1, 0).graph, p), input_error);
}

TEST(Trio, DemotedAnchorFailsT4) {
  Digraph d = gen_random_tournament(60, 1, 5).graph;
  Trio T = build_trio(d, small_params());
  auto a = T.a();
  // turn every edge between a_0 and the other a's outwards
  std::vector<Pair> p;
  for (const Pair& q : d.pairs()) {
    bool into = q.head == a[0] && std::find(a.begin(), a.end(), q.tail) != a.end();
    if (into)
      p.push_back({q.head, q.tail, 1});
    else
      p.push_back(q);
  }
  Digraph e = Digraph::from_pairs(d.n(), p);
  TrioReport r = verify_trio(e, T, 1);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(names(r, "T4"));
}

// O* is conservative, so emptying it is often harmless; across the corpus at
// least one instance must notice, and only through T5/T6.
TEST(Trio, EmptiedExceptionalSetIsCaught) {
  std::size_t nonempty = 0, caught = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 50 + seed % 7 * 10, dbar = seed % 6;
    Digraph d = gen_random_dense(n, dbar, 1, seed, {0.1 * static_cast<double>(seed % 4)}).graph;
    TrioParams p = small_params();
    p.delta_bar = complement_max_degree(d);
    Trio T = build_trio(d, p);
    ASSERT_TRUE(verify_trio(d, T, 1).ok) << seed;
    if (T.O_star.empty()) continue;
    ++nonempty;
    T.O_star.clear();
    TrioReport r = verify_trio(d, T, 1);
    if (r.ok) continue;
    ++caught;
    for (const auto& f : r.failures) EXPECT_TRUE(f == "T5" || f == "T6") << f;
  }
  EXPECT_GT(nonempty, 0u);
  EXPECT_GT(caught, 0u);
}
