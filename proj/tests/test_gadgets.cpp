#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kspan/connectivity.hpp"
#include "kspan/gadgets.hpp"
#include "kspan/generators.hpp"

using namespace kspan;

namespace {

TrioParams params(std::size_t k, std::size_t dbar) {
  std::size_t s = k + dbar;
  TrioParams p;
  p.t1 = s;
  p.t2 = std::max<std::size_t>(1, dbar);
  p.d = 30 * k + 35 * dbar;
  p.m = 5 * s;
  p.u = Rational(static_cast<std::int64_t>(7 * s), 3);
  p.k = k;
  p.delta_bar = dbar;
  return p;
}

// 3k anchors on each side, avoiding A, B and O*.
std::pair<std::vector<vid>, std::vector<vid>> anchors(const Trio& T, std::size_t n, std::size_t k) {
  std::vector<char> used(n, 0);
  for (const auto* s : {&T.A, &T.B, &T.O_star})
    for (vid v : *s) used[v] = 1;
  std::vector<vid> free;
  for (vid v = 0; v < n; ++v)
    if (!used[v]) free.push_back(v);
  return {{free.begin(), free.begin() + 3 * k}, {free.begin() + 3 * k, free.begin() + 6 * k}};
}

Absorber small_absorber(const Digraph& d, std::size_t k, Mode mode) {
  std::vector<vid> A, B;
  for (vid i = 0; i < k; ++i) {
    A.push_back(i);
    B.push_back(static_cast<vid>(d.n() - 1 - i));
  }
  PathSystem ps = disjoint_paths(d, A, B, mode);
  if (mode == Mode::vertex)
    for (Path& p : ps.paths) p = minimalize_path(d, p);
  std::vector<vid> ex = A;
  ex.insert(ex.end(), B.begin(), B.end());
  return build_absorber(d, ex, ps, k, mode);
}

}  // namespace

TEST(Escaper, SingleVertexK1) {
  Digraph d = gen_random_tournament(15, 1, 3).graph;
  Escaper e = build_escaper(d, {4}, 1, Mode::vertex);
  EXPECT_LE(e.E.size(), 4u);
  EXPECT_TRUE(std::find(e.U_out.begin(), e.U_out.end(), 4u) == e.U_out.end());
  GadgetCheck c = check_gadget(e);
  EXPECT_TRUE(c.ok);
  EXPECT_TRUE(c.exhaustive);
  EXPECT_EQ(c.removal_sets, 1u);
}

TEST(Escaper, TournamentSixVerticesK2) {
  Digraph d = gen_random_tournament(40, 2, 11).graph;
  Escaper e = build_escaper(d, {1, 7, 9, 20, 30, 33}, 2, Mode::vertex);
  EXPECT_LE(e.E.size(), 48u);
  EXPECT_LE(e.U_out.size(), 24u);
  GadgetCheck c = check_gadget(e);
  EXPECT_TRUE(c.ok);
  EXPECT_TRUE(c.exhaustive);
}

TEST(Escaper, ExhaustiveUpToK3BothModes) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::size_t k = 1 + seed % 3;
    Mode mode = seed % 2 ? Mode::arc : Mode::vertex;
    Digraph d = gen_random_dense(32 + seed, 2, k, seed, {0.2, 0, 20, mode}).graph;
    Rng rng(seed);
    std::vector<vid> U;
    for (vid v = 0; v < d.n(); ++v)
      if (rng.chance(0.25)) U.push_back(v);
    Escaper e = build_escaper(d, U, k, mode);
    EXPECT_LE(e.E.size(), 4 * k * e.U.size());
    EXPECT_LE(e.U_out.size(), 2 * k * e.U.size());
    GadgetCheck c = check_gadget(e);
    EXPECT_TRUE(c.ok) << "seed " << seed << " " << (c.failure ? c.failure->clause : "");
    EXPECT_TRUE(c.exhaustive);
  }
}

TEST(Escaper, Preconditions) {
  Digraph d = gen_random_tournament(8, 2, 0).graph;
  EXPECT_THROW(build_escaper(d, {0, 1, 2, 3, 4, 5, 6}, 2, Mode::vertex), input_error);
  EXPECT_THROW(build_escaper(d, {0, 1, 2, 3, 4, 5, 6, 7}, 1, Mode::arc), input_error);
}

TEST(Escaper, DeletedEdgeIsDetected) {
  Digraph d = gen_random_tournament(20, 1, 5).graph;
  Escaper e = build_escaper(d, {2, 3, 11}, 1, Mode::vertex);
  std::size_t flipped = 0;
  for (const auto& [edge, c] : e.E.items()) {
    Escaper broken = e;
    EdgeBag E;
    for (const auto& [f, cf] : e.E.items())
      if (f != edge) E.add(f.tail, f.head, cf);
    broken.E = E;
    GadgetCheck r = check_gadget(broken);
    if (!r.ok) {
      ++flipped;
      ASSERT_TRUE(r.failure);
      EXPECT_FALSE(r.failure->clause.empty());
    }
  }
  EXPECT_GT(flipped, 0u);
}

TEST(Conn, EmptyAnchors) {
  Digraph d = gen_random_tournament(60, 1, 2).graph;
  Trio T = build_trio(d, params(1, 0));
  Conn c = build_conn(d, T, {}, {}, 1, Mode::vertex);
  EXPECT_TRUE(c.E.empty());
}

TEST(Conn, TournamentFansAreShort) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Digraph d = gen_random_tournament(60, 1, seed).graph;
    TrioParams p = params(1, 0);
    Trio T = build_trio(d, p);
    auto [Wo, Wi] = anchors(T, 60, 1);
    Conn c = build_conn(d, T, Wo, Wi, 1, Mode::vertex);
    std::size_t want = p.m - p.t1 - p.t2;
    auto a = T.a(), b = T.b();
    for (std::size_t i = 0; i < Wo.size(); ++i) {
      ASSERT_EQ(c.out_fans[i].size(), want);
      std::set<vid> ends;
      for (const Path& q : c.out_fans[i]) {
        EXPECT_EQ(q.front(), Wo[i]);
        EXPECT_LE(q.size(), 3u);
        EXPECT_TRUE(is_path(d, q));
        EXPECT_NE(std::find(a.begin(), a.end(), q.back()), a.end());
        ends.insert(q.back());
      }
      EXPECT_EQ(ends.size(), want);
    }
    for (std::size_t i = 0; i < Wi.size(); ++i)
      for (const Path& q : c.in_fans[i]) {
        EXPECT_EQ(q.back(), Wi[i]);
        EXPECT_LE(q.size(), 3u);
        EXPECT_NE(std::find(b.begin(), b.end(), q.front()), b.end());
      }
    EXPECT_LE(c.E.size(), 6 * 3 * want);
  }
}

TEST(Conn, Preconditions) {
  Digraph d = gen_random_tournament(60, 1, 2).graph;
  Trio T = build_trio(d, params(1, 0));
  EXPECT_THROW(build_conn(d, T, {T.A[0]}, {}, 1, Mode::vertex), input_error);
  Trio U = T;
  U.p.d = 10;
  EXPECT_THROW(build_conn(d, U, {}, {}, 1, Mode::vertex), input_error);
  U = T;
  U.p.m = 2;
  EXPECT_THROW(build_conn(d, U, {}, {}, 1, Mode::vertex), input_error);
}

TEST(Hub, K1TournamentChecks) {
  Digraph d = gen_random_tournament(60, 1, 9).graph;
  TrioParams p = params(1, 0);
  Trio T = build_trio(d, p);
  auto [Wo, Wi] = anchors(T, 60, 1);
  Hub h = build_hub(d, T, Wo, Wi, 1, Mode::vertex);
  EXPECT_LE(h.E.size(), 2 * 1 * p.m + 6 * 3 * (p.m - p.t1 - p.t2));
  EXPECT_TRUE(h.E.within(d));
  GadgetCheck c = check_gadget(h);
  EXPECT_TRUE(c.ok) << (c.failure ? c.failure->clause : "");
}

TEST(Hub, K2ExhaustiveBothModes) {
  for (Mode mode : {Mode::vertex, Mode::arc}) {
    Digraph d = gen_random_tournament(100, 2, 4).graph;
    TrioParams p = params(2, 0);
    Trio T = build_trio(d, p);
    auto [Wo, Wi] = anchors(T, 100, 2);
    Hub h = build_hub(d, T, Wo, Wi, 2, mode);
    EXPECT_LE(h.E.size(), 2 * 2 * p.m + 6 * 6 * (p.m - p.t1 - p.t2));
    GadgetCheck c = check_gadget(h);
    EXPECT_TRUE(c.ok) << (c.failure ? c.failure->clause : "");
    EXPECT_TRUE(c.exhaustive);
  }
}

TEST(Hub, RejectsBadParametersAndOverlap) {
  Digraph d = gen_random_tournament(60, 1, 9).graph;
  Trio T = build_trio(d, params(1, 0));
  auto [Wo, Wi] = anchors(T, 60, 1);
  Trio U = T;
  U.out[0] = U.in[0];
  EXPECT_THROW(build_hub(d, U, Wo, Wi, 1, Mode::vertex), input_error);
  TrioParams q = params(1, 0);
  q.m = 4;
  EXPECT_THROW(check_hub_params(q, 1), input_error);
}

TEST(Absorber, SmallVertexK1) {
  Digraph d = gen_random_tournament(60, 1, 1).graph;
  Absorber a = small_absorber(d, 1, Mode::vertex);
  EXPECT_EQ(a.W_o.size(), 3u);
  EXPECT_EQ(a.W_i.size(), 3u);
  EXPECT_TRUE(a.E.within(d));
  GadgetCheck c = check_gadget(a);
  EXPECT_TRUE(c.ok) << (c.failure ? c.failure->clause : "");
  EXPECT_TRUE(a.bound_met);
}

TEST(Absorber, K2ExhaustiveBothModes) {
  for (Mode mode : {Mode::vertex, Mode::arc}) {
    Digraph d = gen_random_tournament(100, 2, 3).graph;
    Absorber a = small_absorber(d, 2, mode);
    GadgetCheck c = check_gadget(a);
    EXPECT_TRUE(c.ok) << to_string(mode) << " " << (c.failure ? c.failure->clause : "");
    EXPECT_TRUE(c.exhaustive);
    std::size_t sum = 0;
    for (const auto& [name, cnt] : a.component_edges)
      if (name != "abs") sum += cnt;
    EXPECT_GE(sum, a.E.size());
  }
}

TEST(Absorber, Preconditions) {
  Digraph d = gen_random_tournament(40, 1, 1).graph;
  PathSystem ps = disjoint_paths(d, {0}, {39}, Mode::vertex);
  ps.paths[0] = minimalize_path(d, ps.paths[0]);
  EXPECT_THROW(build_absorber(d, {0, 39}, ps, 1, Mode::vertex), input_error);  // headroom
  Digraph e = gen_random_tournament(60, 1, 1).graph;
  PathSystem qs = disjoint_paths(e, {0}, {59}, Mode::vertex);
  qs.paths[0] = minimalize_path(e, qs.paths[0]);
  EXPECT_THROW(build_absorber(e, {0}, qs, 1, Mode::vertex), input_error);  // endpoint outside V_ex
  EXPECT_THROW(build_absorber(e, {0, 59}, qs, 2, Mode::vertex), input_error);
}
