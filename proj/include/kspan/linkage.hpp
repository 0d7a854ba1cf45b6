#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/errors.hpp"
#include "kspan/flow.hpp"
#include "kspan/graph.hpp"

namespace kspan {

struct GoodLinkage {
  std::vector<vid> sigma;  // sigma[i] = vertex at position i (0-based)
  Digraph forward;         // on the same vertex ids as the input
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t achieved_edges = 0;
  std::size_t target_edges = 0;  // kn - k + k*dbar
  std::size_t delta_bar = 0;
};

inline std::vector<std::size_t> positions(const std::vector<vid>& sigma) {
  std::vector<std::size_t> pos(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) pos[sigma[i]] = i;
  return pos;
}

inline bool is_good(const Digraph& g, const std::vector<vid>& sigma, std::size_t k, std::size_t t) {
  std::size_t n = g.n();
  if (sigma.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (vid v : sigma) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  auto pos = positions(sigma);
  for (const Pair& p : g.pairs())
    if (pos[p.tail] >= pos[p.head]) return false;
  for (std::size_t j = 0; j < n; ++j) {
    vid v = sigma[j];
    if (j + t < n && g.out_degree(v) < k) return false;
    if (j >= t && g.in_degree(v) < k) return false;
  }
  return true;
}

inline bool is_good(const GoodLinkage& L) { return is_good(L.forward, L.sigma, L.k, L.t); }

namespace detail {

// +1 if only v->w, -1 if only w->v, 0 for 2-cycles and non-adjacent pairs.
inline int rel(const Digraph& d, vid v, vid w) { return int(d.has(v, w)) - int(d.has(w, v)); }

// Local optimum of the forward-minus-backward count under single-vertex
// moves. At such an order every vertex has, within any window after it, at
// least as many out-only as in-only neighbours, and symmetrically before it.
inline std::vector<vid> median_order(const Digraph& d) {
  std::size_t n = d.n();
  std::vector<vid> sigma(n);
  std::iota(sigma.begin(), sigma.end(), vid{0});
  std::vector<long> score(n);
  for (vid v = 0; v < n; ++v)
    score[v] = static_cast<long>(d.out(v).size()) - static_cast<long>(d.in(v).size());
  std::stable_sort(sigma.begin(), sigma.end(), [&](vid a, vid b) { return score[a] > score[b]; });
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      vid v = sigma[i];
      long best = 0;
      std::size_t to = i;
      long acc = 0;
      for (std::size_t j = i + 1; j < n; ++j) {
        acc -= rel(d, v, sigma[j]);
        if (acc > best) {
          best = acc;
          to = j;
        }
      }
      acc = 0;
      for (std::size_t j = i; j-- > 0;) {
        acc += rel(d, v, sigma[j]);
        if (acc > best) {
          best = acc;
          to = j;
        }
      }
      if (to == i) continue;
      moved = true;
      if (to > i)
        std::rotate(sigma.begin() + static_cast<long>(i), sigma.begin() + static_cast<long>(i) + 1,
                    sigma.begin() + static_cast<long>(to) + 1);
      else
        std::rotate(sigma.begin() + static_cast<long>(to), sigma.begin() + static_cast<long>(i),
                    sigma.begin() + static_cast<long>(i) + 1);
    }
  }
  return sigma;
}

// Fewest forward edges giving out-degree k before position n-t and in-degree
// k from position t on.
inline std::optional<Digraph> select_forward(const Digraph& d, const std::vector<vid>& sigma, std::size_t k,
                                             std::size_t t) {
  std::size_t n = d.n();
  auto pos = positions(sigma);
  FlowNet net(2 * n + 2);
  std::size_t s = 2 * n, z = 2 * n + 1;
  auto K = static_cast<std::int64_t>(k);
  for (vid v = 0; v < n; ++v) {
    net.add_arc(s, v, FlowNet::unbounded, pos[v] + t < n ? K : 0);
    net.add_arc(n + v, z, FlowNet::unbounded, pos[v] >= t ? K : 0);
  }
  std::vector<std::size_t> arc;
  std::vector<Pair> fwd;
  for (const Pair& p : d.pairs())
    if (pos[p.tail] < pos[p.head]) {
      arc.push_back(net.add_arc(p.tail, n + p.head, 1));
      fwd.push_back({p.tail, p.head, 1});
    }
  if (!net.min_flow(s, z)) return std::nullopt;
  std::vector<Pair> chosen;
  for (std::size_t i = 0; i < arc.size(); ++i)
    if (net.flow(arc[i]) > 0) chosen.push_back(fwd[i]);
  return Digraph::from_pairs(n, std::move(chosen));
}

}  // namespace detail

inline std::size_t good_threshold(std::size_t k, std::size_t dbar) { return 2 * k + dbar - 1; }

// (sigma, k, 2k + dbar - 1)-good spanning subgraph of d (parallels dropped).
inline GoodLinkage build_good(const Digraph& input, std::size_t k) {
  if (input.n() == 0) throw input_error("build_good: empty graph");
  if (k == 0) throw input_error("build_good: k must be at least 1");
  Digraph d = reduce_to_simple(input);
  std::size_t n = d.n();
  GoodLinkage L;
  L.k = k;
  L.delta_bar = complement_max_degree(d);
  L.t = good_threshold(k, L.delta_bar);
  L.target_edges = k * n + k * L.delta_bar - k;
  L.sigma = detail::median_order(d);
  auto fwd = detail::select_forward(d, L.sigma, k, L.t);
  if (!fwd) throw construction_error("build_good: no forward selection meets the degree demands", L.sigma);
  L.forward = std::move(*fwd);
  L.achieved_edges = L.forward.m();
  KSPAN_ASSERT(is_good(L), "build_good output is not good");
  return L;
}

struct Removal {
  std::vector<vid> vertices;
  std::vector<Edge> edges;  // one entry per removed copy
  std::size_t size() const { return vertices.size() + edges.size(); }
};

struct LinkResult {
  vid v = 0;  // in sigma(1, t)
  vid w = 0;  // in sigma(n - t + 1, n)
  Path to_u;
  Path from_u;
};

namespace detail {

// BFS in g minus the removal from u, forwards or backwards, until `goal`.
template <class Goal>
inline std::optional<Path> search(const Digraph& g, vid u, const Removal& r, bool forward, Goal goal) {
  std::size_t n = g.n();
  std::vector<char> dead(n, 0);
  for (vid x : r.vertices) dead[x] = 1;
  EdgeBag cut;
  for (const Edge& e : r.edges) cut.add(e.tail, e.head);
  std::vector<vid> par(n, static_cast<vid>(-1));
  std::vector<char> seen(n, 0);
  std::vector<vid> q{u};
  seen[u] = 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    vid x = q[i];
    if (goal(x)) {
      Path p{x};
      while (p.back() != u) p.push_back(par[p.back()]);
      if (forward) std::reverse(p.begin(), p.end());
      return p;
    }
    auto nb = forward ? g.out(x) : g.in(x);
    auto mu = forward ? g.out_mult(x) : g.in_mult(x);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      vid y = nb[j];
      if (seen[y] || dead[y]) continue;
      vid a = forward ? x : y, b = forward ? y : x;
      if (!cut.empty() && cut.count(a, b) >= mu[j]) continue;
      seen[y] = 1;
      par[y] = x;
      q.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline LinkResult link_query(const GoodLinkage& L, vid u, const Removal& removed) {
  std::size_t n = L.forward.n();
  if (u >= n) throw input_error("link_query: unknown vertex");
  if (removed.size() + 1 > L.k) throw input_error("link_query: more than k-1 removals");
  if (L.t < L.k) throw input_error("link_query: t < k");
  for (vid x : removed.vertices)
    if (x == u) throw input_error("link_query: u is removed");
  auto pos = positions(L.sigma);
  auto front = detail::search(L.forward, u, removed, false, [&](vid x) { return pos[x] < L.t; });
  auto back = detail::search(L.forward, u, removed, true, [&](vid x) { return pos[x] + L.t >= n; });
  KSPAN_ASSERT(front && back, "link_query: goodness did not provide a link");
  return {front->front(), back->back(), *front, *back};
}

struct LinkageBlock {
  EdgeBag core;
  std::vector<vid> U_i, U_o;
  Mode mode = Mode::vertex;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t achieved_edges = 0;
  std::size_t target_edges = 0;
};

namespace detail {

inline LinkageBlock block_from(const GoodLinkage& L, const std::vector<vid>& to_parent, Mode mode) {
  LinkageBlock b;
  b.mode = mode;
  b.k = L.k;
  b.t = L.t;
  b.achieved_edges = L.achieved_edges;
  b.target_edges = L.target_edges;
  std::size_t n = L.sigma.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i < L.t) b.U_i.push_back(to_parent[L.sigma[i]]);
    if (i + L.t >= n) b.U_o.push_back(to_parent[L.sigma[i]]);
  }
  for (const Pair& p : L.forward.pairs()) b.core.add(to_parent[p.tail], to_parent[p.head]);
  return b;
}

}  // namespace detail

inline LinkageBlock linkage_block(const Digraph& d, const std::vector<vid>& U, std::size_t k, Mode mode) {
  if (U.empty()) throw input_error("linkage_block: empty vertex set");
  Restricted r = restrict_to(d, U);
  return detail::block_from(build_good(r.graph, k), r.to_parent, mode);
}

// Block inside the interiors of a path system, avoiding the path edges. In arc
// mode a core pair that a path also uses claims a further copy of that pair.
inline LinkageBlock linkage_on_paths(const Digraph& d, const PathSystem& ps, const std::vector<vid>& U,
                                     std::size_t k, Mode mode) {
  EdgeBag path_edges;
  std::vector<char> interior(d.n(), 0);
  std::vector<int> hits(d.n(), 0);
  for (const Path& p : ps.paths) {
    if (!is_path(d, p)) throw input_error("linkage_on_paths: not a path of the graph");
    if (mode == Mode::vertex && !is_minimal_path(d, p))
      throw input_error("linkage_on_paths: path is not minimal");
    for (vid x : p) ++hits[x];
    for (std::size_t i = 1; i + 1 < p.size(); ++i) interior[p[i]] = 1;
    path_edges.add_path(p);
  }
  if (mode == Mode::vertex && std::any_of(hits.begin(), hits.end(), [](int h) { return h > 1; }))
    throw input_error("linkage_on_paths: paths are not vertex-disjoint");
  if (!path_edges.within(d)) throw input_error("linkage_on_paths: paths are not edge-disjoint");
  for (vid u : U)
    if (u >= d.n() || !interior[u]) throw input_error("linkage_on_paths: U leaves the path interiors");
  LinkageBlock b;
  b.mode = mode;
  b.k = k;
  if (U.empty() || k == 1) return b;
  Restricted r = restrict_to(d, U);
  EdgeBag local_paths;
  for (const auto& [e, c] : path_edges.items()) {
    auto i = std::lower_bound(r.to_parent.begin(), r.to_parent.end(), e.tail);
    auto j = std::lower_bound(r.to_parent.begin(), r.to_parent.end(), e.head);
    if (i != r.to_parent.end() && *i == e.tail && j != r.to_parent.end() && *j == e.head)
      local_paths.add(static_cast<vid>(i - r.to_parent.begin()), static_cast<vid>(j - r.to_parent.begin()), c);
  }
  GoodLinkage L = build_good(subtract(r.graph, local_paths), k - 1);
  b = detail::block_from(L, r.to_parent, mode);
  b.k = k;
  EdgeBag core;
  for (const auto& [e, c] : b.core.items()) core.add(e.tail, e.head, path_edges.count(e.tail, e.head) + c);
  b.core = std::move(core);
  return b;
}

}  // namespace kspan
