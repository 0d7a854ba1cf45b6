#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/errors.hpp"
#include "kspan/graph.hpp"
#include "kspan/rng.hpp"

namespace kspan {

// DK_{k,n-k}: complete bipartite K_{k,n-k}, every edge a 2-cycle. The k side is 0..k-1.
inline Digraph gen_dk(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n) throw input_error("dk: need 1 <= k < n");
  std::vector<Edge> e;
  for (vid a = 0; a < k; ++a)
    for (vid b = static_cast<vid>(k); b < n; ++b) {
      e.push_back({a, b});
      e.push_back({b, a});
    }
  return Digraph::from_edges(n, e);
}

// Random labelled tree from a Pruefer sequence, each edge as k 2-cycles.
inline Digraph gen_doubled_tree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 2) throw input_error("doubled_tree: n must be at least 2");
  if (k < 1) throw input_error("doubled_tree: k must be at least 1");
  Rng rng(seed);
  std::vector<std::pair<vid, vid>> tree;
  if (n == 2) {
    tree.push_back({0, 1});
  } else {
    std::vector<vid> code(n - 2);
    for (vid& c : code) c = static_cast<vid>(rng.below(n));
    std::vector<std::size_t> deg(n, 1);
    for (vid c : code) ++deg[c];
    std::set<vid> leaves;
    for (vid v = 0; v < n; ++v)
      if (deg[v] == 1) leaves.insert(v);
    for (vid c : code) {
      vid leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      tree.push_back({leaf, c});
      if (--deg[c] == 1) leaves.insert(c);
    }
    vid u = *leaves.begin(), v = *std::next(leaves.begin());
    tree.push_back({u, v});
  }
  std::vector<Pair> p;
  auto m = static_cast<std::uint32_t>(k);
  for (auto [u, v] : tree) {
    p.push_back({u, v, m});
    p.push_back({v, u, m});
  }
  return Digraph::from_pairs(n, p);
}

namespace detail {

// floor((n-1)/2)-th power of the cycle 0 -> 1 -> ... -> n-1 -> 0; for even n
// the antipodal pairs are oriented by the seed.
inline std::vector<Edge> power_cycle_edges(std::size_t n, Rng& rng) {
  std::vector<Edge> e;
  std::size_t r = (n - 1) / 2;
  for (vid i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= r; ++j) e.push_back({i, static_cast<vid>((i + j) % n)});
  if (n % 2 == 0)
    for (vid i = 0; i < n / 2; ++i) {
      vid o = static_cast<vid>(i + n / 2);
      if (rng.chance(0.5))
        e.push_back({i, o});
      else
        e.push_back({o, i});
    }
  return e;
}

inline void shift(std::vector<Edge>& out, const std::vector<Edge>& in, vid by) {
  for (const Edge& e : in) out.push_back({e.tail + by, e.head + by});
}

}  // namespace detail

inline Digraph gen_power_cycle_tournament(std::size_t n, std::uint64_t seed = 0) {
  if (n < 3) throw input_error("power_cycle_tournament: n must be at least 3");
  Rng rng(seed);
  return Digraph::from_edges(n, detail::power_cycle_edges(n, rng));
}

struct FamilyLayout {
  std::size_t n1 = 0, n2 = 0, k = 0, first = 0;  // first = size of G1 (or T1)
  std::vector<vid> a, b;
};

inline FamilyLayout family_layout(std::size_t first, std::size_t n1, std::size_t n2, std::size_t k) {
  FamilyLayout L{n1, n2, k, first, {}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    L.a.push_back(static_cast<vid>(first + i));
    L.b.push_back(static_cast<vid>(first + n1 + i));
  }
  return L;
}

namespace detail {

inline Digraph family(std::size_t first, bool transitive_first, std::size_t n1, std::size_t n2, std::size_t k,
                      std::uint64_t seed) {
  if (k < 1) throw input_error("family: k must be at least 1");
  if (n1 < 2 * k + 1 || n2 < 2 * k + 1) throw input_error("family: need n1, n2 >= 2k + 1");
  Rng rng(seed);
  std::size_t n = first + n1 + n2;
  auto t2 = static_cast<vid>(first), t3 = static_cast<vid>(first + n1);
  std::vector<Edge> e;
  shift(e, power_cycle_edges(n1, rng), t2);
  shift(e, power_cycle_edges(n2, rng), t3);
  if (transitive_first)
    for (vid i = 0; i < first; ++i)
      for (vid j = i + 1; j < first; ++j) e.push_back({i, j});
  for (vid g = 0; g < first; ++g) {
    for (vid y = 0; y < n2; ++y) e.push_back({g, t3 + y});
    for (vid x = 0; x < n1; ++x) e.push_back({t2 + x, g});
  }
  for (vid x = 0; x < n1; ++x)
    for (vid y = 0; y < n2; ++y) {
      if (x < k && y == x)
        e.push_back({t3 + y, t2 + x});
      else
        e.push_back({t2 + x, t3 + y});
    }
  return Digraph::from_edges(n, e);
}

}  // namespace detail

// G_{n1,n2,k,dbar}: ids 0..dbar are the edgeless part, then T2, then T3.
inline Digraph gen_G(std::size_t n1, std::size_t n2, std::size_t k, std::size_t delta_bar, std::uint64_t seed = 0) {
  return detail::family(delta_bar + 1, false, n1, n2, k, seed);
}

// T_{n1,n2,k}: ids 0..k-1 are the transitive part (0 -> 1 -> ...), then T2, then T3.
inline Digraph gen_T(std::size_t n1, std::size_t n2, std::size_t k, std::uint64_t seed = 0) {
  return detail::family(k, true, n1, n2, k, seed);
}

inline Digraph gen_T_lower(std::size_t m, std::size_t k, std::uint64_t seed = 0) {
  if (m < 1 || k < 1) throw input_error("T_lower: need m, k >= 1");
  return gen_T(2 * m * k + 1, 2 * m * k + 1, m * k, seed);
}

struct Generated {
  Digraph graph;
  std::size_t attempts = 0;
};

struct DenseOptions {
  double two_cycle = 0.0;  // chance that a present pair gets both directions
  double parallel = 0.0;   // chance of one extra parallel copy (multigraph output)
  std::size_t max_attempts = 20;
  Mode mode = Mode::vertex;  // connectivity notion used for rejection
};

// Random digraph whose complement (pairs with no edge either way) has maximum
// degree at most delta_bar, resampled until it is k-connected.
inline Generated gen_random_dense(std::size_t n, std::size_t delta_bar, std::size_t k, std::uint64_t seed,
                                  const DenseOptions& opt = {}) {
  if (n < k + 1) throw input_error("random_dense: need n >= k + 1");
  Rng rng(seed);
  for (std::size_t attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    std::vector<std::size_t> deg(n, 0);
    std::set<std::pair<vid, vid>> gap;
    for (std::size_t tries = 0; tries < 2 * delta_bar * n; ++tries) {
      auto u = static_cast<vid>(rng.below(n)), v = static_cast<vid>(rng.below(n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (deg[u] >= delta_bar || deg[v] >= delta_bar || gap.count({u, v})) continue;
      gap.insert({u, v});
      ++deg[u];
      ++deg[v];
    }
    std::vector<Pair> p;
    for (vid u = 0; u < n; ++u)
      for (vid v = u + 1; v < n; ++v) {
        if (gap.count({u, v})) continue;
        bool both = rng.chance(opt.two_cycle);
        bool fwd = rng.chance(0.5);
        auto mult = [&] { return static_cast<std::uint32_t>(rng.chance(opt.parallel) ? 2 : 1); };
        if (both || fwd) p.push_back({u, v, mult()});
        if (both || !fwd) p.push_back({v, u, mult()});
      }
    Digraph d = Digraph::from_pairs(n, p);
    if (is_connected(d, k, opt.mode)) return {std::move(d), attempt};
  }
  throw input_error("random_dense: no " + std::to_string(k) + "-connected sample in " +
                    std::to_string(opt.max_attempts) + " attempts; lower k or raise n");
}

inline Generated gen_random_tournament(std::size_t n, std::size_t k, std::uint64_t seed) {
  return gen_random_dense(n, 0, k, seed);
}

struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
};

// "n=10,k=2" -> {n: 10, k: 2}
inline std::map<std::string, std::int64_t> parse_params(const std::string& text) {
  std::map<std::string, std::int64_t> r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw input_error("bad parameter '" + item + "', expected name=value");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() - eq - 1) throw input_error("bad integer in '" + item + "'");
    r[item.substr(0, eq)] = v;
  }
  return r;
}

inline Generated generate(const GeneratorSpec& g) {
  auto get = [&](const std::string& key, std::optional<std::int64_t> fallback = std::nullopt) -> std::size_t {
    auto it = g.params.find(key);
    if (it == g.params.end()) {
      if (!fallback) throw input_error(g.family + ": missing parameter '" + key + "'");
      return static_cast<std::size_t>(*fallback);
    }
    if (it->second < 0) throw input_error(g.family + ": parameter '" + key + "' is negative");
    return static_cast<std::size_t>(it->second);
  };
  const std::string& f = g.family;
  if (f == "dk") return {gen_dk(get("k"), get("n")), 1};
  if (f == "doubled_tree") return {gen_doubled_tree(get("n"), get("k"), g.seed), 1};
  if (f == "power_cycle_tournament") return {gen_power_cycle_tournament(get("n"), g.seed), 1};
  if (f == "G_family") return {gen_G(get("n1"), get("n2"), get("k"), get("delta_bar"), g.seed), 1};
  if (f == "T_family") return {gen_T(get("n1"), get("n2"), get("k"), g.seed), 1};
  if (f == "T_lower") return {gen_T_lower(get("m"), get("k"), g.seed), 1};
  if (f == "random_tournament") return gen_random_tournament(get("n"), get("k", 1), g.seed);
  if (f == "random_dense") {
    DenseOptions o;
    o.two_cycle = static_cast<double>(get("two_cycle_pct", 0)) / 100.0;
    o.parallel = static_cast<double>(get("parallel_pct", 0)) / 100.0;
    o.mode = get("arc", 0) ? Mode::arc : Mode::vertex;
    return gen_random_dense(get("n"), get("delta_bar", 0), get("k", 1), g.seed, o);
  }
  throw input_error("unknown family '" + f + "'");
}

}  // namespace kspan
