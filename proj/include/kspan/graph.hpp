#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kspan/errors.hpp"

namespace kspan {

struct Pair {
  vid tail = 0;
  vid head = 0;
  std::uint32_t mult = 1;
  auto operator<=>(const Pair&) const = default;
};

using Path = std::vector<vid>;

// Loop-free directed multigraph on vertices 0..n-1. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) { assign(n, {}); }

  // Repeated pairs accumulate multiplicity.
  static Digraph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<Pair> p;
    p.reserve(edges.size());
    for (const Edge& e : edges) p.push_back({e.tail, e.head, 1});
    Digraph d;
    d.assign(n, std::move(p));
    return d;
  }

  static Digraph from_pairs(std::size_t n, std::vector<Pair> pairs) {
    Digraph d;
    d.assign(n, std::move(pairs));
    return d;
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t pair_count() const { return pairs_.size(); }
  bool simple() const { return simple_; }

  bool has(vid u, vid v) const {
    std::size_t i = static_cast<std::size_t>(u) * n_ + v;
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  std::uint32_t mult(vid u, vid v) const {
    if (!has(u, v)) return 0;
    auto o = out(u);
    auto it = std::lower_bound(o.begin(), o.end(), v);
    return out_mul_[out_start_[u] + static_cast<std::size_t>(it - o.begin())];
  }

  std::span<const vid> out(vid u) const {
    return {out_adj_.data() + out_start_[u], out_start_[u + 1] - out_start_[u]};
  }
  std::span<const vid> in(vid v) const {
    return {in_adj_.data() + in_start_[v], in_start_[v + 1] - in_start_[v]};
  }
  std::span<const std::uint32_t> out_mult(vid u) const {
    return {out_mul_.data() + out_start_[u], out_start_[u + 1] - out_start_[u]};
  }
  std::span<const std::uint32_t> in_mult(vid v) const {
    return {in_mul_.data() + in_start_[v], in_start_[v + 1] - in_start_[v]};
  }

  // Degrees count parallel copies.
  std::size_t out_degree(vid u) const { return out_deg_[u]; }
  std::size_t in_degree(vid v) const { return in_deg_[v]; }

  const std::vector<Pair>& pairs() const { return pairs_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> e;
    e.reserve(m_);
    for (const Pair& p : pairs_)
      for (std::uint32_t c = 0; c < p.mult; ++c) e.push_back({p.tail, p.head});
    return e;
  }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && pairs_ == o.pairs_; }

 private:
  void assign(std::size_t n, std::vector<Pair> pairs) {
    n_ = n;
    for (const Pair& p : pairs) {
      if (p.tail >= n || p.head >= n)
        throw input_error("edge (" + std::to_string(p.tail) + "," + std::to_string(p.head) +
                          ") references a vertex outside 0.." + std::to_string(n));
      if (p.tail == p.head) throw input_error("loop at vertex " + std::to_string(p.tail));
      if (p.mult == 0) throw input_error("zero multiplicity");
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    });
    pairs_.clear();
    for (const Pair& p : pairs) {
      if (!pairs_.empty() && pairs_.back().tail == p.tail && pairs_.back().head == p.head)
        pairs_.back().mult += p.mult;
      else
        pairs_.push_back(p);
    }
    m_ = 0;
    simple_ = true;
    out_start_.assign(n + 1, 0);
    in_start_.assign(n + 1, 0);
    out_deg_.assign(n, 0);
    in_deg_.assign(n, 0);
    bits_.assign((n * n + 63) / 64, 0);
    for (const Pair& p : pairs_) {
      m_ += p.mult;
      if (p.mult > 1) simple_ = false;
      ++out_start_[p.tail + 1];
      ++in_start_[p.head + 1];
      out_deg_[p.tail] += p.mult;
      in_deg_[p.head] += p.mult;
      std::size_t i = static_cast<std::size_t>(p.tail) * n + p.head;
      bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    for (std::size_t v = 0; v < n; ++v) {
      out_start_[v + 1] += out_start_[v];
      in_start_[v + 1] += in_start_[v];
    }
    out_adj_.resize(pairs_.size());
    out_mul_.resize(pairs_.size());
    in_adj_.resize(pairs_.size());
    in_mul_.resize(pairs_.size());
    std::vector<std::size_t> fill(in_start_.begin(), in_start_.end() - 1);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      out_adj_[i] = pairs_[i].head;
      out_mul_[i] = pairs_[i].mult;
      std::size_t j = fill[pairs_[i].head]++;
      in_adj_[j] = pairs_[i].tail;
      in_mul_[j] = pairs_[i].mult;
    }
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  bool simple_ = true;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> out_start_{0}, in_start_{0};
  std::vector<vid> out_adj_, in_adj_;
  std::vector<std::uint32_t> out_mul_, in_mul_;
  std::vector<std::size_t> out_deg_, in_deg_;
  std::vector<std::uint64_t> bits_;
};

// Multiset of edges of some host graph. Within one path system copies add up;
// combining gadgets takes the per-pair maximum, since a gadget claims specific
// copies 0..c-1 of a pair.
class EdgeBag {
 public:
  void add(vid u, vid v, std::uint32_t c = 1) { items_[{u, v}] += c; }

  void add_path(const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) add(p[i], p[i + 1]);
  }

  void merge_max(const EdgeBag& o) {
    for (const auto& [e, c] : o.items_) {
      auto& mine = items_[e];
      mine = std::max(mine, c);
    }
  }

  std::uint32_t count(vid u, vid v) const {
    auto it = items_.find({u, v});
    return it == items_.end() ? 0 : it->second;
  }

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& kv : items_) s += kv.second;
    return s;
  }
  std::size_t pair_count() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  const std::map<Edge, std::uint32_t>& items() const { return items_; }

  Digraph graph(std::size_t n) const {
    std::vector<Pair> p;
    p.reserve(items_.size());
    for (const auto& [e, c] : items_) p.push_back({e.tail, e.head, c});
    return Digraph::from_pairs(n, std::move(p));
  }

  bool within(const Digraph& d) const {
    for (const auto& [e, c] : items_)
      if (e.tail >= d.n() || e.head >= d.n() || d.mult(e.tail, e.head) < c) return false;
    return true;
  }

 private:
  std::map<Edge, std::uint32_t> items_;
};

inline EdgeBag bag_of(const Digraph& d) {
  EdgeBag b;
  for (const Pair& p : d.pairs()) b.add(p.tail, p.head, p.mult);
  return b;
}

inline Digraph reverse(const Digraph& d) {
  std::vector<Pair> p;
  p.reserve(d.pair_count());
  for (const Pair& q : d.pairs()) p.push_back({q.head, q.tail, q.mult});
  return Digraph::from_pairs(d.n(), std::move(p));
}

// Number of distinct neighbours (in or out) of v.
inline std::size_t neighbour_count(const Digraph& d, vid v) {
  auto o = d.out(v);
  auto i = d.in(v);
  std::size_t a = 0, b = 0, c = 0;
  while (a < o.size() && b < i.size()) {
    if (o[a] == i[b]) {
      ++a;
      ++b;
    } else if (o[a] < i[b]) {
      ++a;
    } else {
      ++b;
    }
    ++c;
  }
  return c + (o.size() - a) + (i.size() - b);
}

inline std::size_t complement_max_degree(const Digraph& d) {
  std::size_t best = 0;
  for (vid v = 0; v < d.n(); ++v) best = std::max(best, d.n() - 1 - neighbour_count(d, v));
  return best;
}

struct Restricted {
  Digraph graph;
  std::vector<vid> to_parent;  // child id -> parent id
};

// Induced subgraph on U, relabelled in increasing parent-id order.
inline Restricted restrict_to(const Digraph& d, std::vector<vid> u) {
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end())
    throw input_error("restrict: repeated vertex");
  if (!u.empty() && u.back() >= d.n())
    throw input_error("restrict: unknown vertex " + std::to_string(u.back()));
  std::vector<vid> child(d.n(), static_cast<vid>(-1));
  for (std::size_t i = 0; i < u.size(); ++i) child[u[i]] = static_cast<vid>(i);
  std::vector<Pair> p;
  for (vid x : u) {
    auto o = d.out(x);
    auto mu = d.out_mult(x);
    for (std::size_t j = 0; j < o.size(); ++j)
      if (child[o[j]] != static_cast<vid>(-1)) p.push_back({child[x], child[o[j]], mu[j]});
  }
  return {Digraph::from_pairs(u.size(), std::move(p)), std::move(u)};
}

inline Digraph reduce_to_simple(const Digraph& d) {
  if (d.simple()) return d;
  std::vector<Pair> p = d.pairs();
  for (Pair& q : p) q.mult = 1;
  return Digraph::from_pairs(d.n(), std::move(p));
}

// Drops parallels, then keeps only the lexicographically smaller (tail, head)
// of every 2-cycle, i.e. the edge whose tail has the smaller id.
inline bool oriented_keeps(const Digraph& d, vid u, vid v) {
  return d.has(u, v) && (u < v || !d.has(v, u));
}

inline Digraph orientation_reduce(const Digraph& d) {
  std::vector<Pair> p;
  for (const Pair& q : d.pairs())
    if (oriented_keeps(d, q.tail, q.head)) p.push_back({q.tail, q.head, 1});
  return Digraph::from_pairs(d.n(), std::move(p));
}

inline bool is_path(const Digraph& d, const Path& p) {
  if (p.empty()) return false;
  std::vector<char> seen(d.n(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= d.n() || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i + 1 < p.size() && (p[i + 1] >= d.n() || !d.has(p[i], p[i + 1]))) return false;
  }
  return true;
}

inline bool is_minimal_path(const Digraph& d, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (d.has(p[i], p[j])) return false;
  return true;
}

// Farthest-shortcut scan from the left, repeated until nothing changes.
inline Path minimalize_path(const Digraph& d, Path p) {
  if (!is_path(d, p)) throw input_error("minimalize_path: not a path of the graph");
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
      std::size_t far = i + 1;
      for (std::size_t j = p.size() - 1; j > i + 1; --j)
        if (d.has(p[i], p[j])) {
          far = j;
          break;
        }
      if (far > i + 1) {
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i + 1),
                p.begin() + static_cast<std::ptrdiff_t>(far));
        changed = true;
      }
    }
  }
  return p;
}

// Edges {x', y''} of BG(D) with x' = x and y'' = n + y, one per copy.
inline std::vector<std::pair<vid, vid>> bipartite_representation(const Digraph& d) {
  std::vector<std::pair<vid, vid>> e;
  for (const Pair& p : d.pairs())
    for (std::uint32_t c = 0; c < p.mult; ++c)
      e.emplace_back(p.tail, static_cast<vid>(d.n() + p.head));
  return e;
}

inline bool has_anti_directed_trail(const Digraph& d) {
  std::vector<vid> parent(2 * d.n());
  std::iota(parent.begin(), parent.end(), vid{0});
  auto find = [&](vid x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Pair& p : d.pairs()) {
    if (p.mult > 1) return true;
    vid a = find(p.tail), b = find(static_cast<vid>(d.n() + p.head));
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

struct RankedVertex {
  vid v;
  std::size_t count;
};

// The k vertices with the most distinct in-neighbours (ties to smaller id);
// counts are non-increasing.
inline std::vector<RankedVertex> top_in_degree_vertices(const Digraph& d, std::size_t k) {
  if (d.n() < k) throw input_error("top_in_degree_vertices: fewer than k vertices");
  std::vector<RankedVertex> all;
  for (vid v = 0; v < d.n(); ++v) all.push_back({v, d.in(v).size()});
  std::stable_sort(all.begin(), all.end(),
                   [](const RankedVertex& a, const RankedVertex& b) { return a.count > b.count; });
  all.resize(k);
  return all;
}

inline std::vector<RankedVertex> top_out_degree_vertices(const Digraph& d, std::size_t k) {
  return top_in_degree_vertices(reverse(d), k);
}

// Graph minus a multiset of edges (copies beyond the available count are ignored).
inline Digraph subtract(const Digraph& d, const EdgeBag& b) {
  std::vector<Pair> p;
  for (const Pair& q : d.pairs()) {
    std::uint32_t r = b.count(q.tail, q.head);
    if (r < q.mult) p.push_back({q.tail, q.head, q.mult - r});
  }
  return Digraph::from_pairs(d.n(), std::move(p));
}

inline std::vector<char> mask_of(std::size_t n, const std::vector<vid>& s) {
  std::vector<char> m(n, 0);
  for (vid v : s) m[v] = 1;
  return m;
}

inline std::vector<vid> members(const std::vector<char>& mask) {
  std::vector<vid> s;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) s.push_back(static_cast<vid>(v));
  return s;
}

}  // namespace kspan
