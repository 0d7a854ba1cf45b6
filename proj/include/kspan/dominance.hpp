#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kspan/errors.hpp"
#include "kspan/graph.hpp"
#include "kspan/rational.hpp"

namespace kspan {

// A t-indominator (in = true) or t-outdominator of the induced host graph
// D[host]. Members are kept in construction order: for an indominator x comes
// first and the sink a last; for an outdominator x' comes first and the source
// b last.
struct Dominator {
  bool in = true;
  std::vector<char> host;
  std::vector<vid> members;
  std::vector<vid> U;  // U+ or U-, inside the host
  vid x() const { return members.front(); }
  vid end() const { return members.back(); }
};

namespace detail {

// Edge of the oriented reduction of d (as seen forward, or in reverse).
inline bool oriented(const Digraph& d, vid u, vid v, bool rev) {
  return rev ? oriented_keeps(d, v, u) : oriented_keeps(d, u, v);
}

inline bool edge(const Digraph& d, vid u, vid v, bool rev) { return rev ? d.has(v, u) : d.has(u, v); }

inline std::vector<vid> dominated_set(const Digraph& d, const std::vector<char>& host,
                                      const std::vector<vid>& members, bool rev) {
  std::vector<vid> U;
  for (vid w = 0; w < d.n(); ++w) {
    if (!host[w]) continue;
    bool ok = true;
    for (vid v : members)
      if (v == w || !edge(d, v, w, rev) || edge(d, w, v, rev)) {
        ok = false;
        break;
      }
    if (ok) U.push_back(w);
  }
  return U;
}

inline Dominator find_dominator(const Digraph& d, const std::vector<char>& host, vid x, std::size_t t, bool rev) {
  if (x >= d.n() || !host[x]) throw input_error("dominator: x is not a host vertex");
  if (t == 0) throw input_error("dominator: t must be at least 1");
  Dominator dom;
  dom.in = !rev;
  dom.host = host;
  dom.members.push_back(x);
  std::vector<vid> V;
  for (vid w = 0; w < d.n(); ++w)
    if (host[w] && w != x && oriented(d, x, w, rev)) V.push_back(w);
  while (!V.empty() && dom.members.size() < t) {
    vid pick = V.front();
    std::size_t best = static_cast<std::size_t>(-1);
    for (vid v : V) {
      std::size_t c = 0;
      for (vid w : V)
        if (w != v && oriented(d, v, w, rev)) ++c;
      if (c < best) {
        best = c;
        pick = v;
      }
    }
    KSPAN_ASSERT(2 * best <= V.size(), "dominator halving step failed");
    std::vector<vid> next;
    for (vid w : V)
      if (w != pick && oriented(d, pick, w, rev)) next.push_back(w);
    dom.members.push_back(pick);
    V = std::move(next);
  }
  dom.U = dominated_set(d, host, dom.members, rev);
  return dom;
}

inline std::size_t host_degree(const Digraph& d, const std::vector<char>& host, vid v, bool rev) {
  std::size_t c = 0;
  for (vid w : rev ? d.in(v) : d.out(v))
    if (host[w]) ++c;
  return c;
}

}  // namespace detail

inline Dominator find_indominator(const Digraph& d, const std::vector<char>& host, vid x, std::size_t t = 5) {
  return detail::find_dominator(d, host, x, t, false);
}
inline Dominator find_outdominator(const Digraph& d, const std::vector<char>& host, vid x, std::size_t t = 5) {
  return detail::find_dominator(d, host, x, t, true);
}
inline Dominator find_indominator(const Digraph& d, vid x, std::size_t t = 5) {
  return find_indominator(d, std::vector<char>(d.n(), 1), x, t);
}
inline Dominator find_outdominator(const Digraph& d, vid x, std::size_t t = 5) {
  return find_outdominator(d, std::vector<char>(d.n(), 1), x, t);
}

// ID1/ID2 (or OD1/OD2), recomputing U from scratch.
inline bool is_dominator(const Digraph& d, const Dominator& dom, std::size_t t) {
  bool rev = !dom.in;
  if (dom.members.empty() || dom.members.size() > t || dom.host.size() != d.n()) return false;
  for (std::size_t i = 0; i < dom.members.size(); ++i) {
    if (!dom.host[dom.members[i]]) return false;
    for (std::size_t j = i + 1; j < dom.members.size(); ++j)
      if (!detail::edge(d, dom.members[i], dom.members[j], rev)) return false;
  }
  auto U = detail::dominated_set(d, dom.host, dom.members, rev);
  std::size_t deg = detail::host_degree(d, dom.host, dom.x(), rev);
  return deg >= (std::size_t{1} << (t - 1)) * U.size();
}

struct TrioParams {
  std::size_t t1 = 1, t2 = 1, d = 1, m = 1;
  Rational u{1};
  std::size_t k = 1;
  std::size_t delta_bar = 0;
};

struct Trio {
  TrioParams p;
  std::vector<Dominator> in, out;
  std::vector<vid> O_star;
  std::vector<vid> A, B;  // unions
  std::vector<std::vector<vid>> F_plus, F_minus;

  std::vector<vid> a() const {
    std::vector<vid> r;
    for (const Dominator& x : in) r.push_back(x.end());
    return r;
  }
  std::vector<vid> b() const {
    std::vector<vid> r;
    for (const Dominator& x : out) r.push_back(x.end());
    return r;
  }
};

namespace detail {

inline std::vector<vid> leftover(const Digraph& d, const Dominator& dom) {
  bool rev = !dom.in;
  std::vector<char> mark(d.n(), 0);
  for (vid v : dom.members) mark[v] = 1;
  for (vid v : dom.U) mark[v] = 1;
  for (vid v : dom.members)
    for (vid w : rev ? d.out(v) : d.in(v)) mark[w] = 1;
  std::vector<vid> F;
  for (vid w = 0; w < d.n(); ++w)
    if (dom.host[w] && !mark[w]) F.push_back(w);
  return F;
}

inline std::vector<std::size_t> top_order(const Digraph& d, const std::vector<vid>& ends, std::size_t k,
                                          bool rev) {
  Restricted r = restrict_to(d, ends);
  auto top = rev ? top_out_degree_vertices(r.graph, k) : top_in_degree_vertices(r.graph, k);
  std::vector<std::size_t> order;
  std::vector<char> used(ends.size(), 0);
  for (const RankedVertex& t : top) {
    vid v = r.to_parent[t.v];
    std::size_t i = static_cast<std::size_t>(std::find(ends.begin(), ends.end(), v) - ends.begin());
    order.push_back(i);
    used[i] = 1;
  }
  for (std::size_t i = 0; i < ends.size(); ++i)
    if (!used[i]) order.push_back(i);
  return order;
}

}  // namespace detail

inline void check_trio_params(std::size_t n, const TrioParams& p) {
  if (p.t1 < 1 || p.t2 < 1 || p.d < 1 || p.m < 1) throw input_error("trio: t1, t2, d, m must be at least 1");
  if (p.m < p.k) throw input_error("trio: m < k");
  if (n < 10 * p.m) throw input_error("trio: n < 10m");
  if (p.u * Rational(15) < Rational(static_cast<std::int64_t>(p.d))) throw input_error("trio: u < d/15");
}

inline Trio build_trio(const Digraph& d, const TrioParams& p) {
  check_trio_params(d.n(), p);
  std::size_t n = d.n();
  Trio T;
  T.p = p;
  std::vector<char> host(n, 1);
  for (std::size_t i = 0; i < p.m; ++i) {
    vid x = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    for (vid v = 0; v < n; ++v) {
      if (!host[v]) continue;
      std::size_t c = detail::host_degree(d, host, v, false);
      if (c < best) {
        best = c;
        x = v;
      }
    }
    T.in.push_back(find_indominator(d, host, x));
    for (vid v : T.in.back().members) host[v] = 0;
  }
  for (std::size_t i = 0; i < p.m; ++i) {
    vid x = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    for (vid v = 0; v < n; ++v) {
      if (!host[v]) continue;
      std::size_t c = detail::host_degree(d, host, v, true);
      if (c < best) {
        best = c;
        x = v;
      }
    }
    T.out.push_back(find_outdominator(d, host, x));
    for (vid v : T.out.back().members) host[v] = 0;
  }
  auto reorder = [](std::vector<Dominator>& doms, const std::vector<std::size_t>& order) {
    std::vector<Dominator> r;
    for (std::size_t i : order) r.push_back(std::move(doms[i]));
    doms = std::move(r);
  };
  reorder(T.in, detail::top_order(d, T.a(), p.k, false));
  reorder(T.out, detail::top_order(d, T.b(), p.k, true));
  for (const Dominator& x : T.in) T.A.insert(T.A.end(), x.members.begin(), x.members.end());
  for (const Dominator& x : T.out) T.B.insert(T.B.end(), x.members.begin(), x.members.end());
  std::sort(T.A.begin(), T.A.end());
  std::sort(T.B.begin(), T.B.end());

  std::vector<std::size_t> o_plus(n, 0), o_minus(n, 0), f_plus(n, 0), f_minus(n, 0);
  for (std::size_t i = 0; i < p.m; ++i) {
    T.F_plus.push_back(detail::leftover(d, T.in[i]));
    T.F_minus.push_back(detail::leftover(d, T.out[i]));
    if (Rational(static_cast<std::int64_t>(T.in[i].U.size())) < p.u)
      for (vid v : T.in[i].U) ++o_plus[v];
    if (Rational(static_cast<std::int64_t>(T.out[i].U.size())) < p.u)
      for (vid v : T.out[i].U) ++o_minus[v];
    for (vid v : T.F_plus.back()) ++f_plus[v];
    for (vid v : T.F_minus.back()) ++f_minus[v];
  }
  for (vid v = 0; v < n; ++v)
    if (o_plus[v] > p.t1 || o_minus[v] > p.t1 || f_plus[v] > p.t2 || f_minus[v] > p.t2) T.O_star.push_back(v);
  return T;
}

struct TrioReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& s) {
    ok = false;
    failures.push_back(s);
  }
};

// T1-T9 plus dominator validity, each recomputed from the members and hosts.
inline TrioReport verify_trio(const Digraph& d, const Trio& T, std::size_t k) {
  TrioReport rep;
  const TrioParams& p = T.p;
  std::size_t n = d.n(), m = p.m;
  if (T.in.size() != m || T.out.size() != m) {
    rep.fail("size");
    return rep;
  }
  std::vector<char> inA(n, 0), inB(n, 0), inO(n, 0);
  std::vector<int> owner(n, 0);
  bool disjoint = true;
  for (const Dominator& x : T.in)
    for (vid v : x.members) {
      inA[v] = 1;
      if (owner[v]++) disjoint = false;
    }
  for (const Dominator& x : T.out)
    for (vid v : x.members) {
      inB[v] = 1;
      if (owner[v]++) disjoint = false;
    }
  for (vid v : T.O_star) inO[v] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (!T.in[i].in || !is_dominator(d, T.in[i], 5)) rep.fail("ID1/ID2 at " + std::to_string(i));
    if (T.out[i].in || !is_dominator(d, T.out[i], 5)) rep.fail("OD1/OD2 at " + std::to_string(i));
  }
  bool t1 = true, t2 = true;
  for (std::size_t i = 0; i < m; ++i)
    for (vid v = 0; v < n; ++v) {
      bool core = !inA[v] && !inB[v];
      if (core && !T.in[i].host[v]) t1 = false;
      if (core && !T.out[i].host[v]) t2 = false;
      if (inA[v] && T.out[i].host[v]) t2 = false;
    }
  if (!t1) rep.fail("T1");
  if (!t2) rep.fail("T2");
  if (!disjoint) rep.fail("T3");

  auto a = T.a(), b = T.b();
  auto need = static_cast<long>(m) - static_cast<long>(k) - static_cast<long>(p.delta_bar);
  for (std::size_t i = 0; i < k && i < m; ++i) {
    long ca = 0, cb = 0;
    for (vid w : a)
      if (w != a[i] && d.has(w, a[i])) ++ca;
    for (vid w : b)
      if (w != b[i] && d.has(b[i], w)) ++cb;
    if (2 * ca < need || 2 * cb < need) {
      rep.fail("T4 at " + std::to_string(i));
      break;
    }
  }

  std::vector<std::vector<vid>> Up(m), Um(m);
  std::vector<char> bigp(m), bigm(m);
  for (std::size_t i = 0; i < m; ++i) {
    Up[i] = detail::dominated_set(d, T.in[i].host, T.in[i].members, false);
    Um[i] = detail::dominated_set(d, T.out[i].host, T.out[i].members, true);
    bigp[i] = !(Rational(static_cast<std::int64_t>(Up[i].size())) < p.u);
    bigm[i] = !(Rational(static_cast<std::int64_t>(Um[i].size())) < p.u);
  }
  std::vector<std::size_t> cp(n, 0), cm(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<char> mark(n, 0);
    for (vid v : T.in[i].members) {
      mark[v] = 1;
      for (vid w : d.in(v)) mark[w] = 1;
    }
    if (bigp[i])
      for (vid v : Up[i]) mark[v] = 1;
    for (vid v = 0; v < n; ++v) cp[v] += mark[v];
    std::fill(mark.begin(), mark.end(), 0);
    for (vid v : T.out[i].members) {
      mark[v] = 1;
      for (vid w : d.out(v)) mark[w] = 1;
    }
    if (bigm[i])
      for (vid v : Um[i]) mark[v] = 1;
    for (vid v = 0; v < n; ++v) cm[v] += mark[v];
  }
  std::size_t floor_need = m >= p.t1 + p.t2 ? m - p.t1 - p.t2 : 0;
  bool t5 = true, t6 = true;
  for (vid v = 0; v < n; ++v) {
    if (inA[v] || inB[v] || inO[v]) continue;
    if (cp[v] < floor_need) t5 = false;
    if (cm[v] < floor_need) t6 = false;
  }
  if (!t5) rep.fail("T5");
  if (!t6) rep.fail("T6");

  bool t7 = true, t8 = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (bigp[i])
      for (vid w : Up[i])
        if (detail::host_degree(d, T.in[i].host, w, false) < p.d + Up[i].size()) t7 = false;
    if (bigm[i])
      for (vid w : Um[i])
        if (detail::host_degree(d, T.out[i].host, w, true) < p.d + Um[i].size()) t8 = false;
  }
  if (!t7) rep.fail("T7");
  if (!t8) rep.fail("T8");

  auto M = static_cast<std::int64_t>(m);
  Rational small = Rational(2 * M) * p.u / Rational(static_cast<std::int64_t>(p.t1));
  Rational full = small + Rational(10 * static_cast<std::int64_t>(p.delta_bar) * M, static_cast<std::int64_t>(p.t2));
  Rational size(static_cast<std::int64_t>(T.O_star.size()));
  if (full < size || (p.t2 >= p.delta_bar && small < size)) rep.fail("T9");
  return rep;
}

}  // namespace kspan
