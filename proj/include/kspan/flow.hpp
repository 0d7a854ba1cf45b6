#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "kspan/errors.hpp"

namespace kspan {

// Dinic max-flow over integer capacities, with optional lower bounds handled
// by the usual circulation reduction.
class FlowNet {
 public:
  static constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNet(std::size_t nodes) : head_(nodes, -1) {}

  std::size_t nodes() const { return head_.size(); }
  std::size_t arcs() const { return lb_.size(); }

  std::size_t add_node() {
    head_.push_back(-1);
    return head_.size() - 1;
  }

  std::size_t add_arc(std::size_t u, std::size_t v, std::int64_t cap, std::int64_t lb = 0) {
    if (lb < 0 || cap < lb) throw input_error("flow arc with lower bound above capacity");
    std::size_t id = lb_.size();
    push(u, v, cap - lb);
    push(v, u, 0);
    lb_.push_back(lb);
    cap_.push_back(cap);
    return id;
  }

  std::size_t from(std::size_t arc) const { return to_[2 * arc + 1]; }
  std::size_t to(std::size_t arc) const { return to_[2 * arc]; }
  std::int64_t lower(std::size_t arc) const { return lb_[arc]; }
  std::int64_t capacity(std::size_t arc) const { return cap_[arc]; }
  std::int64_t flow(std::size_t arc) const { return lb_[arc] + res_[2 * arc + 1]; }

  // Augments from s to t over whatever flow is currently present.
  std::int64_t max_flow(std::size_t s, std::size_t t, std::int64_t limit = unbounded) {
    std::int64_t total = 0;
    while (total < limit && levels(s, t)) {
      it_.assign(head_.size(), 0);
      for (std::size_t v = 0; v < head_.size(); ++v) it_[v] = head_[v];
      while (total < limit) {
        std::int64_t f = push_flow(s, t, limit - total);
        if (f == 0) break;
        total += f;
      }
    }
    return total;
  }

  // Minimum s-t flow respecting all lower bounds; nullopt if no feasible flow.
  std::optional<std::int64_t> min_flow(std::size_t s, std::size_t t) {
    std::size_t base = head_.size();
    std::vector<std::int64_t> excess(base, 0);
    for (std::size_t a = 0; a < lb_.size(); ++a) {
      excess[to(a)] += lb_[a];
      excess[from(a)] -= lb_[a];
    }
    std::size_t back = add_arc(t, s, unbounded);
    std::size_t ss = add_node(), tt = add_node();
    std::int64_t need = 0;
    std::vector<std::size_t> aux{back};
    for (std::size_t v = 0; v < base; ++v) {
      if (excess[v] > 0) {
        aux.push_back(add_arc(ss, v, excess[v]));
        need += excess[v];
      } else if (excess[v] < 0) {
        aux.push_back(add_arc(v, tt, -excess[v]));
      }
    }
    if (max_flow(ss, tt) != need) return std::nullopt;
    std::int64_t value = flow(back);
    for (std::size_t a : aux) {
      res_[2 * a] = 0;
      res_[2 * a + 1] = 0;
    }
    value -= max_flow(t, s);
    return value;
  }

  // Nodes reachable from s in the residual network.
  std::vector<char> residual_reach(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> q{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (long e = head_[q[i]]; e != -1; e = next_[e])
        if (res_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          q.push_back(to_[e]);
        }
    return seen;
  }

 private:
  void push(std::size_t u, std::size_t v, std::int64_t cap) {
    to_.push_back(v);
    res_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<long>(to_.size() - 1);
  }

  bool levels(std::size_t s, std::size_t t) {
    level_.assign(head_.size(), -1);
    std::vector<std::size_t> q{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::size_t v = q[i];
      for (long e = head_[v]; e != -1; e = next_[e])
        if (res_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[v] + 1;
          q.push_back(to_[e]);
        }
    }
    return level_[t] >= 0;
  }

  // One augmenting path in the level graph, iteratively.
  std::int64_t push_flow(std::size_t s, std::size_t t, std::int64_t limit) {
    std::vector<long> stack;
    std::size_t v = s;
    while (true) {
      if (v == t) {
        std::int64_t f = limit;
        for (long e : stack) f = std::min(f, res_[e]);
        for (long e : stack) {
          res_[e] -= f;
          res_[e ^ 1] += f;
        }
        return f;
      }
      long& e = it_[v];
      while (e != -1 && !(res_[e] > 0 && level_[to_[e]] == level_[v] + 1)) e = next_[e];
      if (e != -1) {
        stack.push_back(e);
        v = to_[e];
        continue;
      }
      if (stack.empty()) return 0;
      level_[v] = -1;
      long last = stack.back();
      stack.pop_back();
      v = to_[last ^ 1];
      it_[v] = next_[it_[v]];
    }
  }

  std::vector<long> head_, next_, it_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> res_;
  std::vector<std::int64_t> lb_, cap_;
  std::vector<int> level_;
};

struct FlowArc {
  vid tail;
  vid head;
  std::uint32_t units;
};

// Splits an integral flow into `count` simple s-t walks. Cycles met while
// walking are cancelled; among remaining arcs the smallest head id is taken.
inline std::vector<std::vector<vid>> decompose_paths(std::size_t n, const std::vector<FlowArc>& arcs,
                                                     vid s, vid t, std::size_t count) {
  std::vector<std::vector<std::pair<vid, std::uint32_t>>> out(n);
  for (const FlowArc& a : arcs)
    if (a.units > 0) out[a.tail].push_back({a.head, a.units});
  for (auto& l : out) std::sort(l.begin(), l.end());
  auto take = [&](vid v) -> std::optional<vid> {
    for (auto& [w, u] : out[v])
      if (u > 0) return w;
    return std::nullopt;
  };
  auto dec = [&](vid v, vid w) {
    for (auto& [x, u] : out[v])
      if (x == w && u > 0) {
        --u;
        return;
      }
    KSPAN_ASSERT(false, "decompose: missing arc");
  };
  std::vector<std::vector<vid>> paths;
  std::vector<long> pos(n, -1);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<vid> walk{s};
    pos[s] = 0;
    while (walk.back() != t) {
      auto w = take(walk.back());
      KSPAN_ASSERT(w.has_value(), "decompose: flow does not reach the sink");
      if (pos[*w] >= 0) {
        std::size_t start = static_cast<std::size_t>(pos[*w]);
        dec(walk.back(), *w);
        for (std::size_t j = start; j + 1 < walk.size(); ++j) dec(walk[j], walk[j + 1]);
        for (std::size_t j = start + 1; j < walk.size(); ++j) pos[walk[j]] = -1;
        walk.resize(start + 1);
        continue;
      }
      pos[*w] = static_cast<long>(walk.size());
      walk.push_back(*w);
    }
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) dec(walk[j], walk[j + 1]);
    for (vid v : walk) pos[v] = -1;
    paths.push_back(std::move(walk));
  }
  return paths;
}

}  // namespace kspan
