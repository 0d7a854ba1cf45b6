#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/errors.hpp"
#include "kspan/graph.hpp"
#include "kspan/rng.hpp"

namespace kspan {

struct MinimalSubgraph {
  Digraph graph;
  Mode mode = Mode::vertex;
  std::size_t k = 0;
  std::vector<Edge> deletion_log;
};

// Greedy deletion in one pass. For a k-connected D and e = uv, D - e is still
// k-connected iff D - e has k disjoint u-v paths, and an edge that cannot go
// never becomes removable later, so one sweep leaves a minimal graph.
inline MinimalSubgraph minimal_subgraph(const Digraph& d, std::size_t k, Mode mode,
                                        std::optional<std::uint64_t> shuffle_seed = std::nullopt,
                                        bool assume_connected = false) {
  if (!assume_connected) {
    Verdict v = is_connected(d, k, mode);
    if (!v) throw infeasible_error("input is not strongly " + std::to_string(k) +
                                       (mode == Mode::vertex ? "-connected" : "-arc-connected"),
                                   *v.witness);
  }
  PathEngine eng(d);
  std::size_t m = eng.edge_count();
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  if (shuffle_seed) {
    Rng rng(*shuffle_seed);
    rng.shuffle(order);
  } else {
    std::vector<std::size_t> key(m);
    for (std::uint32_t e = 0; e < m; ++e) {
      vid u = eng.tail(e), v = eng.head(e);
      key[e] = d.out_degree(u) + d.in_degree(u) + d.out_degree(v) + d.in_degree(v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return key[a] > key[b]; });
  }
  MinimalSubgraph r;
  r.mode = mode;
  r.k = k;
  for (std::uint32_t e : order) {
    vid u = eng.tail(e), v = eng.head(e);
    eng.set_alive(e, false);
    bool removable = (mode == Mode::vertex && eng.alive_copy(u, v)) || eng.count(u, v, k, mode) >= k;
    if (removable)
      r.deletion_log.push_back({u, v});
    else
      eng.set_alive(e, true);
  }
  EdgeBag kept;
  for (std::uint32_t e = 0; e < m; ++e)
    if (eng.alive(e)) kept.add(eng.tail(e), eng.head(e));
  r.graph = kept.graph(d.n());
  return r;
}

inline MinimalSubgraph minimal_k_connected(const Digraph& d, std::size_t k,
                                           std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  return minimal_subgraph(d, k, Mode::vertex, shuffle_seed);
}

inline MinimalSubgraph minimal_k_arc_connected(const Digraph& d, std::size_t k,
                                               std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
  return minimal_subgraph(d, k, Mode::arc, shuffle_seed);
}

// Same result type, but the deletion pass starts from a sparse seeded
// k-connected subgraph H of d: a minimal spanning subgraph of H is one of d.
// H keeps c random out- and in-pairs per vertex, c doubling until H qualifies.
inline MinimalSubgraph minimal_subgraph_sparse(const Digraph& d, std::size_t k, Mode mode,
                                               std::uint64_t seed = 0) {
  Rng rng(seed);
  for (std::size_t c = 2 * k + 2;; c *= 2) {
    std::vector<char> keep(d.pair_count(), 0);
    std::vector<std::size_t> first(d.n() + 1, 0);
    for (const Pair& p : d.pairs()) ++first[p.tail + 1];
    for (std::size_t v = 0; v < d.n(); ++v) first[v + 1] += first[v];
    std::vector<std::vector<std::size_t>> in_ids(d.n());
    for (std::size_t i = 0; i < d.pairs().size(); ++i) in_ids[d.pairs()[i].head].push_back(i);
    std::size_t kept = 0;
    auto pick = [&](std::vector<std::size_t> ids) {
      rng.shuffle(ids);
      for (std::size_t j = 0; j < ids.size() && j < c; ++j)
        if (!keep[ids[j]]) {
          keep[ids[j]] = 1;
          kept += d.pairs()[ids[j]].mult;
        }
    };
    for (vid v = 0; v < d.n(); ++v) {
      std::vector<std::size_t> out_ids(first[v + 1] - first[v]);
      std::iota(out_ids.begin(), out_ids.end(), first[v]);
      pick(std::move(out_ids));
      pick(in_ids[v]);
    }
    if (2 * kept >= d.m()) return minimal_subgraph(d, k, mode);
    std::vector<Pair> p;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[i]) p.push_back(d.pairs()[i]);
    Digraph h = Digraph::from_pairs(d.n(), p);
    if (is_connected(h, k, mode)) return minimal_subgraph(h, k, mode, std::nullopt, true);
  }
}

inline std::size_t induced_edge_count(const Digraph& d, const std::vector<vid>& U) {
  std::vector<char> in = mask_of(d.n(), U);
  std::size_t c = 0;
  for (const Pair& p : d.pairs())
    if (in[p.tail] && in[p.head]) c += p.mult;
  return c;
}

// 2k|U| - k - 1 in vertex mode, 2k(|U| - 1) in arc mode.
inline std::size_t induced_density_bound(std::size_t u, std::size_t k, Mode mode) {
  return mode == Mode::vertex ? 2 * k * u - k - 1 : 2 * k * (u - 1);
}

inline bool check_induced_density(const MinimalSubgraph& M, const std::vector<vid>& U) {
  if (U.empty()) throw input_error("check_induced_density: empty vertex set");
  for (vid v : U)
    if (v >= M.graph.n()) throw input_error("check_induced_density: unknown vertex");
  std::vector<vid> u = U;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return induced_edge_count(M.graph, u) <= induced_density_bound(u.size(), M.k, M.mode);
}

}  // namespace kspan
