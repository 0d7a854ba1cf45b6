#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/dominance.hpp"
#include "kspan/errors.hpp"
#include "kspan/graph.hpp"
#include "kspan/linkage.hpp"
#include "kspan/minimal.hpp"
#include "kspan/rng.hpp"

namespace kspan {

struct Escaper {
  EdgeBag E;
  std::vector<vid> U, U_out;
  Mode mode = Mode::vertex;
  std::size_t k = 0;
  std::size_t n = 0;
};

// Fans to and from V \ U for every u in U, taken inside a fixed minimal
// spanning subgraph so that only the last edge of a fan path leaves U.
inline Escaper build_escaper(const Digraph& d, const std::vector<vid>& U, std::size_t k, Mode mode,
                             const Digraph* minimal = nullptr) {
  std::size_t n = d.n();
  if (k == 0) throw input_error("escaper: k must be at least 1");
  std::vector<char> in_u(n, 0);
  for (vid u : U) {
    if (u >= n) throw input_error("escaper: unknown vertex");
    in_u[u] = 1;
  }
  std::size_t size = static_cast<std::size_t>(std::count(in_u.begin(), in_u.end(), 1));
  if (mode == Mode::vertex && size + k > n) throw input_error("escaper: |U| > n - k");
  if (mode == Mode::arc && size >= n) throw input_error("escaper: U must be a proper subset");
  Escaper esc;
  esc.mode = mode;
  esc.k = k;
  esc.n = n;
  esc.U = members(in_u);
  if (esc.U.empty()) return esc;
  std::optional<Digraph> own;
  if (!minimal) {
    own = minimal_subgraph_sparse(d, k, mode).graph;
    minimal = &*own;
  }
  if (minimal->n() != n) throw input_error("escaper: minimal subgraph has the wrong order");
  std::vector<vid> rest;
  for (vid v = 0; v < n; ++v)
    if (!in_u[v]) rest.push_back(v);
  std::vector<char> out(n, 0);
  for (vid u : esc.U) {
    for (Direction dir : {Direction::to, Direction::from}) {
      PathSystem ps = fan(*minimal, u, rest, dir, k, mode);
      EdgeBag local;
      for (const Path& p : ps.paths) {
        local.add_path(p);
        for (vid x : p)
          if (!in_u[x]) out[x] = 1;
      }
      esc.E.merge_max(local);
    }
  }
  esc.U_out = members(out);
  KSPAN_ASSERT(esc.E.size() <= 4 * k * esc.U.size(), "escaper exceeds 4k|U| edges");
  KSPAN_ASSERT(esc.U_out.size() <= 2 * k * esc.U.size(), "escaper exceeds 2k|U| exits");
  return esc;
}

struct Conn {
  EdgeBag E;
  std::vector<std::vector<Path>> out_fans;  // per W_o vertex, paths ending at some a_i
  std::vector<std::vector<Path>> in_fans;   // per W_i vertex, paths starting at some b_i
};

namespace detail {

// Short fan from u to the ends of the dominators (or from them, when rev).
inline std::vector<Path> short_fan(const Digraph& d, const Trio& T, vid u, std::size_t want, Mode mode,
                                   bool rev) {
  const auto& doms = rev ? T.out : T.in;
  const auto& own = rev ? T.B : T.A;
  const auto& F = rev ? T.F_minus : T.F_plus;
  std::size_t n = d.n();
  std::vector<char> in_own(n, 0), used(n, 0);
  for (vid v : own) in_own[v] = 1;
  auto e = [&](vid x, vid y) { return detail::edge(d, x, y, rev); };
  std::vector<Path> fan;
  // dominated indices first pass, then the rest, both by increasing index
  std::vector<int> kind(doms.size(), -1);
  std::vector<vid> mid(doms.size(), 0);
  for (std::size_t i = 0; i < doms.size(); ++i) {
    const Dominator& dom = doms[i];
    vid a = dom.end();
    if (e(u, a)) {
      kind[i] = 0;
      mid[i] = a;
      continue;
    }
    for (vid w : dom.members)
      if (w != a && e(u, w) && e(w, a)) {
        kind[i] = 0;
        mid[i] = w;
        break;
      }
  }
  std::size_t picked = 0;
  for (std::size_t i = 0; i < doms.size() && picked < want; ++i) {
    if (kind[i] == 0) {
      used[mid[i]] = 1;
      ++picked;
    }
  }
  for (std::size_t i = 0, got = 0; i < doms.size() && got < want; ++i) {
    if (kind[i] == 0) {
      ++got;
      continue;
    }
    const Dominator& dom = doms[i];
    if (Rational(static_cast<std::int64_t>(dom.U.size())) < T.p.u) continue;
    if (!std::binary_search(dom.U.begin(), dom.U.end(), u)) continue;
    std::vector<char> bad(n, 0);
    for (vid v : dom.U) bad[v] = 1;
    for (vid v : F[i]) bad[v] = 1;
    for (vid w : rev ? d.in(u) : d.out(u)) {
      if (!dom.host[w] || bad[w] || used[w] || w == u) continue;
      if (mode == Mode::vertex && in_own[w]) continue;
      if (std::find(dom.members.begin(), dom.members.end(), w) != dom.members.end()) continue;
      kind[i] = 1;
      mid[i] = w;
      used[w] = 1;
      ++got;
      break;
    }
    KSPAN_ASSERT(kind[i] == 1, "conn: no exit neighbour for a dominated-set vertex");
  }
  for (std::size_t i = 0; i < doms.size() && fan.size() < want; ++i) {
    if (kind[i] < 0) continue;
    const Dominator& dom = doms[i];
    vid a = dom.end();
    Path p{u};
    if (kind[i] == 0) {
      if (mid[i] != a) p.push_back(mid[i]);
    } else {
      vid w = mid[i];
      p.push_back(w);
      std::optional<vid> next;
      for (vid x : dom.members)
        if (e(w, x)) {
          next = x;
          break;
        }
      KSPAN_ASSERT(next.has_value(), "conn: exit neighbour is not dominated");
      if (*next != a) p.push_back(*next);
    }
    p.push_back(a);
    if (rev) std::reverse(p.begin(), p.end());
    fan.push_back(std::move(p));
  }
  return fan;
}

}  // namespace detail

// For every u in W_o a fan of m - t1 - t2 paths of length at most 3 into the
// ends a_i, and symmetrically from the ends b_i to every v in W_i.
inline Conn build_conn(const Digraph& d, const Trio& T, const std::vector<vid>& W_o, const std::vector<vid>& W_i,
                       std::size_t k, Mode mode) {
  const TrioParams& p = T.p;
  if (p.m < p.t1 + p.t2 + k) throw input_error("conn: m < t1 + t2 + k");
  std::size_t need_d = (mode == Mode::vertex ? 6 * p.m : p.m) + 5 * p.delta_bar;
  if (p.d < need_d)
    throw input_error(mode == Mode::vertex ? "conn: d < 6m + 5*dbar" : "conn: d < m + 5*dbar");
  std::vector<char> blocked(d.n(), 0);
  for (vid v : T.A) blocked[v] = 1;
  for (vid v : T.B) blocked[v] = 1;
  for (vid v : T.O_star) blocked[v] = 1;
  for (const auto* W : {&W_o, &W_i})
    for (vid v : *W)
      if (v >= d.n() || blocked[v]) throw input_error("conn: anchor set meets A, B or O*");
  std::size_t want = p.m - p.t1 - p.t2;
  Conn c;
  for (int side = 0; side < 2; ++side) {
    bool rev = side == 1;
    for (vid u : rev ? W_i : W_o) {
      auto fan = detail::short_fan(d, T, u, want, mode, rev);
      KSPAN_ASSERT(fan.size() == want, "conn: fewer than m - t1 - t2 dominator routes");
      EdgeBag local;
      for (const Path& q : fan) local.add_path(q);
      c.E.merge_max(local);
      (rev ? c.in_fans : c.out_fans).push_back(std::move(fan));
    }
  }
  std::size_t w = std::max(W_o.size(), W_i.size());
  KSPAN_ASSERT(c.E.size() <= 6 * w * want, "conn exceeds 6w(m - t1 - t2) edges");
  return c;
}

struct Hub {
  EdgeBag E;
  std::vector<vid> A0, B0;
  std::vector<vid> U_o, U_i;
  Mode mode = Mode::vertex;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t conn_edges = 0;
};

// m >= 2t1 + 2t2 + 3k + dbar - 2 suffices for the re-route through a_i a_t.
inline void check_hub_params(const TrioParams& p, std::size_t k) {
  if (p.m < p.t1 + p.t2 + k) throw input_error("hub: m < t1 + t2 + k");
  if (p.m + 2 < 2 * p.t1 + 2 * p.t2 + 3 * k + p.delta_bar)
    throw input_error("hub: m < 2t1 + 2t2 + 3k + dbar - 2");
}

inline Hub build_hub(const Digraph& d, const Trio& T, const std::vector<vid>& W_o, const std::vector<vid>& W_i,
                     std::size_t k, Mode mode) {
  check_hub_params(T.p, k);
  std::size_t m = T.p.m;
  auto a = T.a(), b = T.b();
  Hub h;
  h.mode = mode;
  h.k = k;
  h.n = d.n();
  h.A0.assign(a.begin(), a.begin() + static_cast<long>(k));
  h.B0.assign(b.begin(), b.begin() + static_cast<long>(k));
  for (vid x : h.A0)
    if (std::find(h.B0.begin(), h.B0.end(), x) != h.B0.end()) throw input_error("hub: A0 and B0 intersect");
  h.U_o = W_o;
  h.U_i = W_i;
  Conn c = build_conn(d, T, W_o, W_i, k, mode);
  h.conn_edges = c.E.size();
  h.E = std::move(c.E);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t j = 0; j < m; ++j) {
      if (j != t && d.has(a[j], a[t]) && !h.E.count(a[j], a[t])) h.E.add(a[j], a[t]);
      if (j != t && d.has(b[t], b[j]) && !h.E.count(b[t], b[j])) h.E.add(b[t], b[j]);
    }
  std::size_t w = std::max(W_o.size(), W_i.size());
  KSPAN_ASSERT(h.E.size() <= 2 * k * m + 6 * w * (m - T.p.t1 - T.p.t2), "hub exceeds 2km + 6w(m - t1 - t2) edges");
  return h;
}

struct Absorber {
  EdgeBag E;
  std::vector<vid> V_ex;
  PathSystem paths;
  std::vector<vid> W_i, W_o;
  Mode mode = Mode::vertex;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t delta_bar = 0;
  std::map<std::string, std::size_t> component_edges;
  std::size_t bound = 0;
  bool bound_met = false;
  std::size_t linkage_achieved = 0;
  std::size_t linkage_target = 0;
};

inline std::size_t absorber_bound(std::size_t n, std::size_t k, std::size_t dbar, std::size_t ex, Mode mode) {
  std::size_t s = k + dbar;
  return mode == Mode::vertex ? k * n + 226 * k * s + 38 * s + (5 * k + 1) * ex
                              : k * n + 210 * k * s + 32 * s + (5 * k + 1) * ex;
}

inline std::size_t absorber_headroom(std::size_t k, std::size_t dbar, Mode mode) {
  return mode == Mode::vertex ? 39 * k + 38 * dbar : 33 * k + 32 * dbar;
}

inline TrioParams inner_trio_params(std::size_t k, std::size_t dbar, Mode mode) {
  TrioParams p;
  p.t1 = k;
  p.t2 = k;
  p.d = mode == Mode::vertex ? 18 * k + 5 * dbar : 3 * k + 5 * dbar;
  p.m = 3 * k;
  p.u = Rational(static_cast<std::int64_t>(p.d), 15);
  p.k = k;
  p.delta_bar = dbar;
  return p;
}

inline Absorber build_absorber(const Digraph& d, const std::vector<vid>& V_ex, const PathSystem& paths, std::size_t k,
                               Mode mode, const Digraph* minimal = nullptr) {
  std::size_t n = d.n();
  if (k == 0) throw input_error("absorber: k must be at least 1");
  if (mode == Mode::vertex && !d.simple()) throw input_error("absorber: vertex mode needs a simple digraph");
  std::vector<char> ex(n, 0);
  for (vid v : V_ex) {
    if (v >= n) throw input_error("absorber: unknown vertex in V_ex");
    ex[v] = 1;
  }
  std::size_t dbar = complement_max_degree(d);
  std::vector<vid> rest;
  for (vid v = 0; v < n; ++v)
    if (!ex[v]) rest.push_back(v);
  if (rest.size() < absorber_headroom(k, dbar, mode))
    throw input_error(mode == Mode::vertex ? "absorber: |V \\ V_ex| < 39k + 38*dbar"
                                           : "absorber: |V \\ V_ex| < 33k + 32*dbar");
  if (paths.paths.size() != k) throw input_error("absorber: need exactly k paths");
  EdgeBag path_edges;
  std::vector<int> hits(n, 0);
  std::vector<char> interior(n, 0);
  for (const Path& p : paths.paths) {
    if (p.size() < 2 || !is_path(d, p)) throw input_error("absorber: not a path of the graph");
    if (!ex[p.front()] || !ex[p.back()]) throw input_error("absorber: path endpoint outside V_ex");
    if (mode == Mode::vertex && !is_minimal_path(d, p)) throw input_error("absorber: path is not minimal");
    for (vid x : p) ++hits[x];
    for (std::size_t i = 1; i + 1 < p.size(); ++i) interior[p[i]] = 1;
    path_edges.add_path(p);
  }
  if (mode == Mode::vertex && std::any_of(hits.begin(), hits.end(), [](int h) { return h > 1; }))
    throw input_error("absorber: paths are not vertex-disjoint");
  if (!path_edges.within(d)) throw input_error("absorber: paths are not edge-disjoint");

  Absorber r;
  r.V_ex = members(ex);
  r.paths = paths;
  r.mode = mode;
  r.k = k;
  r.n = n;
  r.delta_bar = dbar;

  Restricted inner = restrict_to(d, rest);
  Trio T = build_trio(inner.graph, inner_trio_params(k, dbar, mode));
  auto up = [&](vid x) { return inner.to_parent[x]; };
  std::vector<char> ex2 = ex;
  for (vid v : T.A) ex2[up(v)] = 1;
  for (vid v : T.B) ex2[up(v)] = 1;
  for (vid v : T.O_star) ex2[up(v)] = 1;

  std::optional<Digraph> own;
  if (!minimal) {
    own = minimal_subgraph_sparse(d, k, mode).graph;
    minimal = &*own;
  }
  Escaper esc = build_escaper(d, members(ex2), k, mode, minimal);
  std::vector<char> out = mask_of(n, esc.U_out);
  std::vector<vid> X1p, X1;
  for (vid v = 0; v < n; ++v) {
    if (ex2[v] || out[v]) continue;
    (interior[v] ? X1p : X1).push_back(v);
  }
  std::vector<vid> U_o, U_i;
  auto take = [&](const LinkageBlock& b) {
    U_o.insert(U_o.end(), b.U_o.begin(), b.U_o.end());
    U_i.insert(U_i.end(), b.U_i.begin(), b.U_i.end());
    r.linkage_achieved += b.achieved_edges;
    r.linkage_target += b.target_edges;
  };
  EdgeBag total = path_edges;
  r.component_edges["paths"] = path_edges.size();
  total.merge_max(esc.E);
  r.component_edges["escaper"] = esc.E.size();
  for (auto [name, set] : {std::pair<const char*, const std::vector<vid>*>{"linkage_out", &esc.U_out},
                           {"linkage_rest", &X1}}) {
    if (set->empty()) {
      r.component_edges[name] = 0;
      continue;
    }
    LinkageBlock b = linkage_block(d, *set, k, mode);
    take(b);
    total.merge_max(b.core);
    r.component_edges[name] = b.core.size();
  }
  LinkageBlock lp = linkage_on_paths(d, paths, X1p, k, mode);
  take(lp);
  total.merge_max(lp.core);
  r.component_edges["linkage_paths"] = lp.core.size() - std::min(lp.core.size(), [&] {
    std::size_t s = 0;
    for (const auto& [e, c] : lp.core.items()) s += path_edges.count(e.tail, e.head);
    return s;
  }());

  std::vector<long> local(n, -1);
  for (std::size_t i = 0; i < inner.to_parent.size(); ++i) local[inner.to_parent[i]] = static_cast<long>(i);
  auto down = [&](std::vector<vid> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (vid& x : s) {
      KSPAN_ASSERT(local[x] >= 0, "absorber: served vertex inside V_ex");
      x = static_cast<vid>(local[x]);
    }
    return s;
  };
  Conn c = build_conn(inner.graph, T, down(U_o), down(U_i), k, mode);
  EdgeBag conn;
  for (const auto& [e, cnt] : c.E.items()) conn.add(up(e.tail), up(e.head), cnt);
  total.merge_max(conn);
  r.component_edges["conn"] = conn.size();
  KSPAN_ASSERT(total.within(d), "absorber: edge set is not a subgraph");
  r.E = std::move(total);
  r.component_edges["abs"] = r.E.size();
  for (vid a : T.a()) r.W_o.push_back(up(a));
  for (vid b : T.b()) r.W_i.push_back(up(b));
  r.bound = absorber_bound(n, k, dbar, r.V_ex.size(), mode);
  r.bound_met = r.E.size() <= r.bound;
  return r;
}

// Independent contract checks by breadth-first search over the gadget's own
// edges, for every removal set (or a seeded sample when there are too many).
struct GadgetFailure {
  std::string clause;
  vid vertex = 0;
  std::vector<vid> removed_vertices;
  std::vector<Edge> removed_edges;
};

struct GadgetCheck {
  bool ok = true;
  bool exhaustive = false;
  std::size_t removal_sets = 0;
  std::optional<GadgetFailure> failure;
  explicit operator bool() const { return ok; }
};

struct CheckOptions {
  std::size_t budget = 100000;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

namespace detail {

struct Clause {
  const char* name;
  std::vector<vid> sources;
  bool backward;  // search against the edge direction
  std::vector<vid> required;
};

class ReachRunner {
 public:
  ReachRunner(std::size_t n, const EdgeBag& E) : g_(E.graph(n)), seen_(n, 0) {}

  const Digraph& graph() const { return g_; }

  // Returns the first required vertex not reached, if any.
  std::optional<vid> run(const Clause& c, const std::vector<char>& gone, const std::map<Edge, std::uint32_t>& cut) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::vector<vid> q;
    for (vid s : c.sources)
      if (!gone[s] && !seen_[s]) {
        seen_[s] = 1;
        q.push_back(s);
      }
    for (std::size_t i = 0; i < q.size(); ++i) {
      vid x = q[i];
      auto nb = c.backward ? g_.in(x) : g_.out(x);
      auto mu = c.backward ? g_.in_mult(x) : g_.out_mult(x);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        vid y = nb[j];
        if (seen_[y] || gone[y]) continue;
        if (!cut.empty()) {
          Edge e = c.backward ? Edge{y, x} : Edge{x, y};
          auto it = cut.find(e);
          if (it != cut.end() && it->second >= mu[j]) continue;
        }
        seen_[y] = 1;
        q.push_back(y);
      }
    }
    for (vid v : c.required)
      if (!gone[v] && !seen_[v]) return v;
    return std::nullopt;
  }

 private:
  Digraph g_;
  std::vector<char> seen_;
};

inline double binom_sum(std::size_t n, std::size_t r) {
  double total = 0, term = 1;
  for (std::size_t j = 0; j <= r && j <= n; ++j) {
    total += term;
    term = term * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  return total;
}

template <class Visit>
void each_subset(std::size_t size, std::size_t max_r, Visit visit) {
  std::vector<std::size_t> idx;
  visit(idx);
  for (std::size_t r = 1; r <= max_r && r <= size; ++r) {
    idx.resize(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      visit(idx);
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == size - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

// Vertex mode removes vertices from the span of E; arc mode removes edge
// copies of E. Anchors bias the sampled removals.
inline GadgetCheck run_contract(std::size_t n, const EdgeBag& E, Mode mode, std::size_t k,
                                const std::vector<vid>& anchors, const CheckOptions& opt,
                                const std::function<std::vector<Clause>(const std::vector<char>&)>& clauses) {
  ReachRunner runner(n, E);
  GadgetCheck res;
  std::vector<char> gone(n, 0);
  std::map<Edge, std::uint32_t> cut;
  auto test = [&](const std::vector<vid>& S, const std::vector<Edge>& F) {
    ++res.removal_sets;
    for (vid v : S) gone[v] = 1;
    for (const Edge& e : F) ++cut[e];
    bool ok = true;
    for (const Clause& c : clauses(gone)) {
      auto miss = runner.run(c, gone, cut);
      if (miss) {
        ok = false;
        res.ok = false;
        res.failure = GadgetFailure{c.name, *miss, S, F};
        break;
      }
    }
    for (vid v : S) gone[v] = 0;
    cut.clear();
    return ok;
  };
  std::size_t r = k - 1;
  std::vector<vid> span;
  std::vector<Edge> copies;
  if (mode == Mode::vertex) {
    std::vector<char> touched(n, 0);
    for (const auto& [e, c] : E.items()) touched[e.tail] = touched[e.head] = 1;
    span = members(touched);
  } else {
    for (const auto& [e, c] : E.items())
      for (std::uint32_t i = 0; i < c; ++i) copies.push_back(e);
  }
  std::size_t ground = mode == Mode::vertex ? span.size() : copies.size();
  if (binom_sum(ground, r) <= static_cast<double>(opt.budget)) {
    res.exhaustive = true;
    each_subset(ground, r, [&](const std::vector<std::size_t>& idx) {
      if (!res.ok) return;
      std::vector<vid> S;
      std::vector<Edge> F;
      for (std::size_t i : idx) {
        if (mode == Mode::vertex)
          S.push_back(span[i]);
        else
          F.push_back(copies[i]);
      }
      test(S, F);
    });
    return res;
  }
  Rng rng(opt.seed);
  std::vector<char> anchor_mask = mask_of(n, anchors);
  std::vector<std::size_t> anchor_idx;
  for (std::size_t i = 0; i < ground; ++i) {
    if (mode == Mode::vertex ? anchor_mask[span[i]] : (anchor_mask[copies[i].tail] || anchor_mask[copies[i].head]))
      anchor_idx.push_back(i);
  }
  auto draw = [&](std::vector<std::size_t> idx, const std::vector<std::size_t>& pool) {
    std::vector<char> pick(ground, 0);
    for (std::size_t i : idx) pick[i] = 1;
    std::size_t guard = 0;
    while (idx.size() < r && guard++ < 64 * (r + 1)) {
      std::size_t i = pool.empty() || rng.chance(0.5) ? rng.below(ground) : pool[rng.below(pool.size())];
      if (!pick[i]) {
        pick[i] = 1;
        idx.push_back(i);
      }
    }
    std::vector<vid> S;
    std::vector<Edge> F;
    for (std::size_t i : idx) {
      if (mode == Mode::vertex)
        S.push_back(span[i]);
      else
        F.push_back(copies[i]);
    }
    return test(S, F);
  };
  if (!draw({}, {})) return res;
  for (std::size_t s = 0; s < opt.samples; ++s)
    if (!draw({}, {})) return res;
  for (std::size_t i : anchor_idx)
    if (!draw({i}, anchor_idx)) return res;
  return res;
}

}  // namespace detail

inline GadgetCheck check_gadget(const Escaper& g, const CheckOptions& opt = {}) {
  std::vector<char> in_u = mask_of(g.n, g.U);
  for (vid v : g.U_out)
    if (in_u[v]) {
      GadgetCheck r;
      r.ok = false;
      r.failure = GadgetFailure{"E1", v, {}, {}};
      return r;
    }
  return detail::run_contract(g.n, g.E, g.mode, g.k, g.U_out, opt, [&](const std::vector<char>&) {
    return std::vector<detail::Clause>{{"E2", g.U_out, true, g.U}, {"E3", g.U_out, false, g.U}};
  });
}

inline GadgetCheck check_gadget(const Hub& g, const CheckOptions& opt = {}) {
  GadgetCheck bad;
  bad.ok = false;
  if (g.A0.size() != g.k || g.B0.size() != g.k) {
    bad.failure = GadgetFailure{"H1", 0, {}, {}};
    return bad;
  }
  for (vid x : g.A0)
    if (std::find(g.B0.begin(), g.B0.end(), x) != g.B0.end()) {
      bad.failure = GadgetFailure{"H1", x, {}, {}};
      return bad;
    }
  std::vector<vid> anchors = g.A0;
  anchors.insert(anchors.end(), g.B0.begin(), g.B0.end());
  return detail::run_contract(g.n, g.E, g.mode, g.k, anchors, opt, [&](const std::vector<char>& gone) {
    std::vector<detail::Clause> cs;
    for (std::size_t t = 0; t < g.k; ++t) {
      if (!gone[g.A0[t]]) cs.push_back({"H2", {g.A0[t]}, true, g.U_o});
      if (!gone[g.B0[t]]) cs.push_back({"H3", {g.B0[t]}, false, g.U_i});
    }
    return cs;
  });
}

inline GadgetCheck check_gadget(const Absorber& g, const CheckOptions& opt = {}) {
  GadgetCheck bad;
  bad.ok = false;
  std::vector<char> ex = mask_of(g.n, g.V_ex);
  EdgeBag own;
  for (const Path& p : g.paths.paths) {
    if (p.empty() || !ex[p.front()] || !ex[p.back()]) {
      bad.failure = GadgetFailure{"A1", p.empty() ? 0 : p.front(), {}, {}};
      return bad;
    }
    own.add_path(p);
  }
  for (const auto& [e, c] : own.items())
    if (g.E.count(e.tail, e.head) < c) {
      bad.failure = GadgetFailure{"A2", e.tail, {}, {}};
      return bad;
    }
  std::vector<vid> all(g.n);
  for (vid v = 0; v < g.n; ++v) all[v] = v;
  std::vector<vid> anchors = g.W_o;
  anchors.insert(anchors.end(), g.W_i.begin(), g.W_i.end());
  for (const Path& p : g.paths.paths) anchors.insert(anchors.end(), p.begin(), p.end());
  return detail::run_contract(g.n, g.E, g.mode, g.k, anchors, opt, [&](const std::vector<char>&) {
    return std::vector<detail::Clause>{{"A3", g.W_o, true, all}, {"A4", g.W_i, false, all}};
  });
}

}  // namespace kspan
