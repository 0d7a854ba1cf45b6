#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kspan/errors.hpp"
#include "kspan/flow.hpp"
#include "kspan/graph.hpp"

namespace kspan {

// Unit-capacity augmenting-path counter over the individual edge copies of a
// graph. Copies and vertices can be switched off, so one engine serves a whole
// sequence of deletion queries. Vertex mode splits vertices implicitly.
class PathEngine {
 public:
  static constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);

  explicit PathEngine(const Digraph& d) : n_(d.n()) {
    std::size_t m = d.m();
    tail_.reserve(m);
    head_.reserve(m);
    out_start_.assign(n_ + 1, 0);
    pair_first_.reserve(d.pair_count() + 1);
    for (const Pair& p : d.pairs()) {
      pair_first_.push_back(static_cast<std::uint32_t>(tail_.size()));
      for (std::uint32_t c = 0; c < p.mult; ++c) {
        tail_.push_back(p.tail);
        head_.push_back(p.head);
      }
      out_start_[p.tail + 1] += p.mult;
    }
    pair_first_.push_back(static_cast<std::uint32_t>(tail_.size()));
    for (std::size_t v = 0; v < n_; ++v) out_start_[v + 1] += out_start_[v];
    in_start_.assign(n_ + 1, 0);
    for (vid h : head_) ++in_start_[h + 1];
    for (std::size_t v = 0; v < n_; ++v) in_start_[v + 1] += in_start_[v];
    in_edges_.resize(m);
    std::vector<std::uint32_t> fill(in_start_.begin(), in_start_.end() - 1);
    for (std::uint32_t e = 0; e < m; ++e) in_edges_[fill[head_[e]]++] = e;
    alive_.assign(m, 1);
    vertex_alive_.assign(n_, 1);
    flow_.assign(m, 0);
    in_flow_.assign(n_, none);
    seen_.assign(2 * n_, 0);
    par_node_.assign(2 * n_, 0);
    par_edge_.assign(2 * n_, none);
    pairs_ = d.pairs();
  }

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return tail_.size(); }
  vid tail(std::uint32_t e) const { return tail_[e]; }
  vid head(std::uint32_t e) const { return head_[e]; }
  bool alive(std::uint32_t e) const { return alive_[e]; }
  void set_alive(std::uint32_t e, bool a) { alive_[e] = a; }
  void set_vertex_alive(vid v, bool a) { vertex_alive_[v] = a; }
  bool vertex_alive(vid v) const { return vertex_alive_[v]; }

  // Id of copy `c` of the pair (u, v).
  std::uint32_t copy_id(vid u, vid v, std::uint32_t c = 0) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{u, v, 0},
                               [](const Pair& a, const Pair& b) {
                                 return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
                               });
    KSPAN_ASSERT(it != pairs_.end() && it->tail == u && it->head == v && c < it->mult,
                 "copy_id: no such edge copy");
    return pair_first_[static_cast<std::size_t>(it - pairs_.begin())] + c;
  }

  bool alive_copy(vid u, vid v) const {
    for (std::uint32_t e = out_start_[u]; e < out_start_[u + 1]; ++e)
      if (head_[e] == v && alive_[e]) return true;
    return false;
  }

  // Number of disjoint s-t paths, stopping at `limit`. On a short count the
  // minimum separator (vertex mode) or cut (arc mode) goes into `witness`.
  std::size_t count(vid s, vid t, std::size_t limit, Mode mode, Witness* witness = nullptr) {
    KSPAN_ASSERT(s != t, "path count between identical vertices");
    if (!vertex_alive_[s] || !vertex_alive_[t]) return 0;
    if (mode == Mode::vertex && alive_copy(s, t)) return limit;
    std::size_t found = 0;
    touched_.clear();
    while (found < limit) {
      bool ok = mode == Mode::vertex ? search_vertex(s, t) : search_arc(s, t);
      if (!ok) break;
      if (mode == Mode::vertex)
        augment_vertex(s, t);
      else
        augment_arc(s, t);
      ++found;
    }
    if (found < limit && witness) *witness = mode == Mode::vertex ? cut_vertex(s, t) : cut_arc(s, t);
    for (std::uint32_t e : touched_) {
      flow_[e] = 0;
      in_flow_[head_[e]] = none;
    }
    return found;
  }

 private:
  std::uint32_t next_stamp() {
    if (++stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    return stamp_;
  }

  // Node 2v is v's entry copy, 2v+1 its exit copy.
  bool search_vertex(vid s, vid t) {
    std::uint32_t st = next_stamp();
    queue_.clear();
    std::uint32_t src = 2 * s + 1;
    seen_[src] = st;
    queue_.push_back(src);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::uint32_t x = queue_[qi];
      vid v = x >> 1;
      if (x & 1) {
        for (std::uint32_t e = out_start_[v]; e < out_start_[v + 1]; ++e) {
          vid w = head_[e];
          if (!alive_[e] || flow_[e] || !vertex_alive_[w] || w == s) continue;
          std::uint32_t y = 2 * w;
          if (seen_[y] == st) continue;
          seen_[y] = st;
          par_node_[y] = x;
          par_edge_[y] = e;
          if (w == t) return true;
          queue_.push_back(y);
        }
        if (v != s && in_flow_[v] != none) {
          std::uint32_t y = 2 * v;
          if (seen_[y] != st) {
            seen_[y] = st;
            par_node_[y] = x;
            par_edge_[y] = none;
            queue_.push_back(y);
          }
        }
      } else {
        if (in_flow_[v] == none) {
          std::uint32_t y = 2 * v + 1;
          if (seen_[y] != st) {
            seen_[y] = st;
            par_node_[y] = x;
            par_edge_[y] = none;
            queue_.push_back(y);
          }
        } else {
          std::uint32_t e = in_flow_[v];
          std::uint32_t y = 2 * tail_[e] + 1;
          if (seen_[y] != st) {
            seen_[y] = st;
            par_node_[y] = x;
            par_edge_[y] = e;
            queue_.push_back(y);
          }
        }
      }
    }
    return false;
  }

  void augment_vertex(vid s, vid t) {
    steps_.clear();
    for (std::uint32_t y = 2 * t; y != 2 * s + 1; y = par_node_[y])
      if (par_edge_[y] != none) steps_.push_back({par_edge_[y], (y & 1) == 0});
    for (const auto& [e, fwd] : steps_)
      if (!fwd) {
        flow_[e] = 0;
        if (in_flow_[head_[e]] == e) in_flow_[head_[e]] = none;
      }
    for (const auto& [e, fwd] : steps_)
      if (fwd) {
        flow_[e] = 1;
        touched_.push_back(e);
        if (head_[e] != t) in_flow_[head_[e]] = e;
      }
  }

  bool search_arc(vid s, vid t) {
    std::uint32_t st = next_stamp();
    queue_.clear();
    seen_[s] = st;
    queue_.push_back(s);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      vid v = queue_[qi];
      for (std::uint32_t e = out_start_[v]; e < out_start_[v + 1]; ++e) {
        vid w = head_[e];
        if (!alive_[e] || flow_[e] || !vertex_alive_[w] || seen_[w] == st) continue;
        seen_[w] = st;
        par_node_[w] = v;
        par_edge_[w] = e;
        if (w == t) return true;
        queue_.push_back(w);
      }
      for (std::uint32_t i = in_start_[v]; i < in_start_[v + 1]; ++i) {
        std::uint32_t e = in_edges_[i];
        vid w = tail_[e];
        if (!flow_[e] || seen_[w] == st) continue;
        seen_[w] = st;
        par_node_[w] = v;
        par_edge_[w] = e;
        queue_.push_back(w);
      }
    }
    return false;
  }

  void augment_arc(vid s, vid t) {
    for (vid y = t; y != s; y = par_node_[y]) {
      std::uint32_t e = par_edge_[y];
      if (head_[e] == y) {
        flow_[e] = 1;
        touched_.push_back(e);
      } else {
        flow_[e] = 0;
      }
    }
  }

  Witness cut_vertex(vid s, vid t) {
    std::uint32_t st = stamp_;
    Witness w;
    w.from = s;
    w.to = t;
    std::vector<char> mark(n_, 0);
    for (vid v = 0; v < n_; ++v) {
      if (v == s || v == t || !vertex_alive_[v]) continue;
      if (seen_[2 * v] == st && seen_[2 * v + 1] != st) mark[v] = 1;
    }
    for (std::uint32_t e = 0; e < tail_.size(); ++e) {
      if (!alive_[e] || !vertex_alive_[tail_[e]] || !vertex_alive_[head_[e]]) continue;
      vid x = tail_[e], y = head_[e];
      if (y == s) continue;
      if (seen_[2 * x + 1] == st && seen_[2 * y] != st) mark[y != t ? y : x] = 1;
    }
    for (vid v = 0; v < n_; ++v)
      if (mark[v]) w.vertices.push_back(v);
    return w;
  }

  Witness cut_arc(vid s, vid t) {
    std::uint32_t st = stamp_;
    Witness w;
    w.from = s;
    w.to = t;
    for (std::uint32_t e = 0; e < tail_.size(); ++e) {
      if (!alive_[e] || !vertex_alive_[tail_[e]] || !vertex_alive_[head_[e]]) continue;
      if (seen_[tail_[e]] == st && seen_[head_[e]] != st) w.edges.push_back({tail_[e], head_[e]});
    }
    return w;
  }

  std::size_t n_;
  std::vector<vid> tail_, head_;
  std::vector<std::uint32_t> out_start_, in_start_, in_edges_, pair_first_;
  std::vector<Pair> pairs_;
  std::vector<char> alive_, vertex_alive_, flow_;
  std::vector<std::uint32_t> in_flow_;
  std::vector<std::uint32_t> seen_, par_node_, par_edge_, queue_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::pair<std::uint32_t, bool>> steps_;
  std::uint32_t stamp_ = 0;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
  explicit operator bool() const { return holds; }
};

// Plain reachability in d minus vertices and/or edge copies.
inline bool reaches(const Digraph& d, vid s, vid t, const std::vector<vid>& gone_vertices,
                    const std::vector<Edge>& gone_edges) {
  std::vector<char> dead(d.n(), 0);
  for (vid v : gone_vertices) dead[v] = 1;
  if (dead[s] || dead[t]) return false;
  EdgeBag cut;
  for (const Edge& e : gone_edges) cut.add(e.tail, e.head);
  std::vector<char> seen(d.n(), 0);
  std::vector<vid> q{s};
  seen[s] = 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    vid v = q[i];
    if (v == t) return true;
    auto o = d.out(v);
    auto mu = d.out_mult(v);
    for (std::size_t j = 0; j < o.size(); ++j) {
      vid w = o[j];
      if (seen[w] || dead[w]) continue;
      if (!cut.empty() && cut.count(v, w) >= mu[j]) continue;
      seen[w] = 1;
      q.push_back(w);
    }
  }
  return false;
}

inline Verdict is_k_connected(const Digraph& d, std::size_t k) {
  if (k == 0) throw input_error("k must be at least 1");
  if (d.n() < k + 1) {
    Witness w;
    for (vid v = 0; v + 1 < d.n(); ++v) w.vertices.push_back(v);
    return {false, w};
  }
  PathEngine eng(d);
  for (vid w = 0; w < k; ++w)
    for (vid v = 0; v < d.n(); ++v) {
      if (v == w) continue;
      Witness wit;
      if (eng.count(w, v, k, Mode::vertex, &wit) < k) return {false, wit};
      if (eng.count(v, w, k, Mode::vertex, &wit) < k) return {false, wit};
    }
  return {true, std::nullopt};
}

inline Verdict is_k_arc_connected(const Digraph& d, std::size_t k) {
  if (k == 0) throw input_error("k must be at least 1");
  PathEngine eng(d);
  for (vid v = 1; v < d.n(); ++v) {
    Witness wit;
    if (eng.count(0, v, k, Mode::arc, &wit) < k) return {false, wit};
    if (eng.count(v, 0, k, Mode::arc, &wit) < k) return {false, wit};
  }
  return {true, std::nullopt};
}

inline Verdict is_connected(const Digraph& d, std::size_t k, Mode mode) {
  return mode == Mode::vertex ? is_k_connected(d, k) : is_k_arc_connected(d, k);
}

enum class Direction { to, from };

struct PathSystem {
  std::vector<Path> paths;
  Mode mode = Mode::vertex;
  std::vector<std::size_t> sigma;  // paths[i] ends at targets[sigma[i]]
};

namespace detail {

struct SplitNet {
  FlowNet net;
  std::vector<std::size_t> edge_arc;  // per pair of d
};

// Vertex v has entry node 2v and exit node 2v+1; graph edges run exit->entry.
inline SplitNet split_network(const Digraph& d, Mode mode, std::size_t extra) {
  std::size_t n = d.n();
  SplitNet s{FlowNet(2 * n + extra), {}};
  for (vid v = 0; v < n; ++v) s.net.add_arc(2 * v, 2 * v + 1, mode == Mode::vertex ? 1 : FlowNet::unbounded);
  for (const Pair& p : d.pairs())
    s.edge_arc.push_back(s.net.add_arc(2 * p.tail + 1, 2 * p.head, mode == Mode::vertex ? 1 : p.mult));
  return s;
}

inline std::vector<FlowArc> vertex_flows(const Digraph& d, const SplitNet& s) {
  std::vector<FlowArc> arcs;
  for (std::size_t i = 0; i < d.pairs().size(); ++i) {
    std::int64_t f = s.net.flow(s.edge_arc[i]);
    if (f > 0) arcs.push_back({d.pairs()[i].tail, d.pairs()[i].head, static_cast<std::uint32_t>(f)});
  }
  return arcs;
}

inline Witness flow_witness(const Digraph& d, const SplitNet& s, std::size_t src, vid from, vid to,
                            Mode mode) {
  auto reach = s.net.residual_reach(src);
  Witness w;
  w.from = from;
  w.to = to;
  for (std::size_t a = 0; a < s.net.arcs(); ++a) {
    std::size_t x = s.net.from(a), y = s.net.to(a);
    if (!reach[x] || reach[y]) continue;
    if (x < 2 * d.n() && y < 2 * d.n()) {
      if (x + 1 == y && (x & 1) == 0)
        w.vertices.push_back(static_cast<vid>(x / 2));
      else if (mode == Mode::arc)
        for (std::int64_t c = 0; c < s.net.capacity(a); ++c)
          w.edges.push_back({static_cast<vid>(x / 2), static_cast<vid>(y / 2)});
      else
        w.vertices.push_back(static_cast<vid>(y / 2));
    }
  }
  std::sort(w.vertices.begin(), w.vertices.end());
  w.vertices.erase(std::unique(w.vertices.begin(), w.vertices.end()), w.vertices.end());
  return w;
}

inline Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace detail

// k-fan (vertex mode) or k-arc-fan (arc mode) between v and the set S.
inline PathSystem fan(const Digraph& d, vid v, const std::vector<vid>& S, Direction dir,
                      std::size_t k, Mode mode) {
  if (v >= d.n()) throw input_error("fan: unknown vertex");
  if (S.empty()) throw input_error("fan: empty target set");
  std::vector<char> in_s(d.n(), 0);
  for (vid x : S) {
    if (x >= d.n()) throw input_error("fan: unknown vertex in S");
    in_s[x] = 1;
  }
  if (in_s[v]) throw input_error("fan: v lies in S");
  if (mode == Mode::vertex && std::count(in_s.begin(), in_s.end(), 1) < static_cast<long>(k))
    throw input_error("fan: |S| < k");
  if (dir == Direction::from) {
    PathSystem r = fan(reverse(d), v, S, Direction::to, k, mode);
    for (Path& p : r.paths) p = detail::reversed(std::move(p));
    return r;
  }
  std::size_t n = d.n();
  // S vertices get no outgoing graph arcs, so each path meets S once.
  std::vector<Pair> kept;
  for (const Pair& p : d.pairs())
    if (!in_s[p.tail]) kept.push_back(p);
  Digraph h = Digraph::from_pairs(n, kept);
  auto sn = detail::split_network(h, mode, 1);
  std::size_t sink = 2 * n;
  for (vid x = 0; x < n; ++x)
    if (in_s[x]) sn.net.add_arc(2 * x + 1, sink, mode == Mode::vertex ? 1 : FlowNet::unbounded);
  std::size_t src = 2 * v + 1;
  std::int64_t f = sn.net.max_flow(src, sink, static_cast<std::int64_t>(k));
  if (f < static_cast<std::int64_t>(k))
    throw infeasible_error("fan: only " + std::to_string(f) + " of " + std::to_string(k) + " paths exist",
                           detail::flow_witness(h, sn, src, v, v, mode));
  auto arcs = detail::vertex_flows(h, sn);
  for (vid x = 0; x < n; ++x) {
    if (!in_s[x]) continue;
    std::int64_t into = 0;
    for (const FlowArc& a : arcs)
      if (a.head == x) into += a.units;
    if (into > 0) arcs.push_back({x, static_cast<vid>(n), static_cast<std::uint32_t>(into)});
  }
  auto walks = decompose_paths(n + 1, arcs, v, static_cast<vid>(n), k);
  PathSystem ps;
  ps.mode = mode;
  for (auto& w : walks) {
    w.pop_back();
    ps.paths.push_back(std::move(w));
  }
  return ps;
}

inline PathSystem k_fan(const Digraph& d, vid v, const std::vector<vid>& S, Direction dir, std::size_t k) {
  return fan(d, v, S, dir, k, Mode::vertex);
}
inline PathSystem k_arc_fan(const Digraph& d, vid v, const std::vector<vid>& S, Direction dir,
                            std::size_t k) {
  return fan(d, v, S, dir, k, Mode::arc);
}

// k disjoint paths from A to B; paths[i] starts at A[i] and ends at B[sigma[i]].
inline PathSystem disjoint_paths(const Digraph& d, const std::vector<vid>& A, const std::vector<vid>& B,
                                 Mode mode) {
  std::size_t k = A.size();
  if (k == 0 || B.size() != k) throw input_error("disjoint_paths: need equally sized nonempty A, B");
  std::vector<char> tag(d.n(), 0);
  for (vid a : A) {
    if (a >= d.n() || tag[a]) throw input_error("disjoint_paths: repeated or unknown source");
    tag[a] = 1;
  }
  for (vid b : B) {
    if (b >= d.n() || tag[b]) throw input_error("disjoint_paths: A and B overlap or repeat");
    tag[b] = 2;
  }
  std::size_t n = d.n();
  auto sn = detail::split_network(d, mode, 2);
  std::size_t src = 2 * n, sink = 2 * n + 1;
  for (vid a : A) sn.net.add_arc(src, 2 * a, 1);
  for (vid b : B) sn.net.add_arc(2 * b + 1, sink, 1);
  std::int64_t f = sn.net.max_flow(src, sink);
  if (f < static_cast<std::int64_t>(k))
    throw infeasible_error("disjoint_paths: only " + std::to_string(f) + " paths exist",
                           detail::flow_witness(d, sn, src, A[0], B[0], mode));
  auto arcs = detail::vertex_flows(d, sn);
  for (vid a : A) arcs.push_back({static_cast<vid>(n), a, 1});
  for (vid b : B) arcs.push_back({b, static_cast<vid>(n + 1), 1});
  auto walks = decompose_paths(n + 2, arcs, static_cast<vid>(n), static_cast<vid>(n + 1), k);
  PathSystem ps;
  ps.mode = mode;
  ps.paths.resize(k);
  ps.sigma.resize(k);
  for (auto& w : walks) {
    Path p(w.begin() + 1, w.end() - 1);
    std::size_t i = static_cast<std::size_t>(std::find(A.begin(), A.end(), p.front()) - A.begin());
    std::size_t j = static_cast<std::size_t>(std::find(B.begin(), B.end(), p.back()) - B.begin());
    KSPAN_ASSERT(i < k && j < k, "disjoint_paths: path with foreign endpoints");
    ps.paths[i] = std::move(p);
    ps.sigma[i] = j;
  }
  return ps;
}

// Predicates for path systems, straight from the definitions.
inline bool is_fan(const Digraph& d, vid v, const std::vector<vid>& S, Direction dir, std::size_t k,
                   const PathSystem& ps) {
  if (ps.paths.size() != k) return false;
  std::vector<char> in_s = mask_of(d.n(), S);
  std::vector<int> used(d.n(), 0);
  EdgeBag edges;
  for (const Path& p : ps.paths) {
    if (!is_path(d, p) || p.size() < 2) return false;
    vid start = dir == Direction::to ? p.front() : p.back();
    vid end = dir == Direction::to ? p.back() : p.front();
    if (start != v || !in_s[end]) return false;
    std::size_t hits = 0;
    for (vid x : p) hits += in_s[x];
    if (hits != 1) return false;
    for (vid x : p)
      if (x != v) ++used[x];
    edges.add_path(p);
  }
  if (ps.mode == Mode::vertex) return std::all_of(used.begin(), used.end(), [](int c) { return c <= 1; });
  for (const auto& [e, c] : edges.items())
    if (d.mult(e.tail, e.head) < c) return false;
  return true;
}

inline bool is_disjoint_system(const Digraph& d, const std::vector<vid>& A, const std::vector<vid>& B,
                               const PathSystem& ps) {
  std::size_t k = A.size();
  if (ps.paths.size() != k || ps.sigma.size() != k) return false;
  std::vector<char> hit(k, 0);
  std::vector<int> used(d.n(), 0);
  EdgeBag edges;
  for (std::size_t i = 0; i < k; ++i) {
    const Path& p = ps.paths[i];
    if (!is_path(d, p) || ps.sigma[i] >= k || hit[ps.sigma[i]]) return false;
    hit[ps.sigma[i]] = 1;
    if (p.front() != A[i] || p.back() != B[ps.sigma[i]]) return false;
    for (vid x : p) ++used[x];
    edges.add_path(p);
  }
  if (ps.mode == Mode::vertex) return std::all_of(used.begin(), used.end(), [](int c) { return c <= 1; });
  for (const auto& [e, c] : edges.items())
    if (d.mult(e.tail, e.head) < c) return false;
  return true;
}

struct DegreeOptimum {
  Digraph graph;
  std::size_t h = 0;
};

// Minimum spanning subgraph with all in- and out-degrees at least k. With
// `multigraph` set, a pair may be used up to its multiplicity.
inline DegreeOptimum min_degree_spanning_subgraph(const Digraph& d, std::size_t k, bool multigraph = false) {
  if (!d.simple() && !multigraph)
    throw input_error("min_degree_spanning_subgraph: parallel edges need the multigraph option");
  for (vid v = 0; v < d.n(); ++v) {
    if (d.out_degree(v) < k)
      throw input_error("vertex " + std::to_string(v) + " has out-degree below " + std::to_string(k));
    if (d.in_degree(v) < k)
      throw input_error("vertex " + std::to_string(v) + " has in-degree below " + std::to_string(k));
  }
  std::size_t n = d.n();
  FlowNet net(2 * n + 2);
  std::size_t s = 2 * n, t = 2 * n + 1;
  auto K = static_cast<std::int64_t>(k);
  for (vid v = 0; v < n; ++v) {
    net.add_arc(s, v, FlowNet::unbounded, K);
    net.add_arc(n + v, t, FlowNet::unbounded, K);
  }
  std::vector<std::size_t> arc;
  for (const Pair& p : d.pairs()) arc.push_back(net.add_arc(p.tail, n + p.head, p.mult));
  auto value = net.min_flow(s, t);
  KSPAN_ASSERT(value.has_value(), "degree network infeasible despite degree check");
  std::vector<Pair> chosen;
  for (std::size_t i = 0; i < arc.size(); ++i) {
    std::int64_t f = net.flow(arc[i]);
    if (f > 0) chosen.push_back({d.pairs()[i].tail, d.pairs()[i].head, static_cast<std::uint32_t>(f)});
  }
  DegreeOptimum r{Digraph::from_pairs(n, std::move(chosen)), static_cast<std::size_t>(*value)};
  KSPAN_ASSERT(r.graph.m() == r.h, "degree optimum size mismatch");
  return r;
}

}  // namespace kspan
