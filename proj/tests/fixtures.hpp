#pragma once

#include "kspan/graph.hpp"

namespace fx {

using kspan::Digraph;
using kspan::Edge;
using kspan::vid;

inline Digraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (vid v = 0; v < n; ++v) e.push_back({v, static_cast<vid>((v + 1) % n)});
  return Digraph::from_edges(n, e);
}

inline Digraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (vid u = 0; u < n; ++u)
    for (vid v = 0; v < n; ++v)
      if (u != v) e.push_back({u, v});
  return Digraph::from_edges(n, e);
}

// i -> j for i < j
inline Digraph transitive(std::size_t n) {
  std::vector<Edge> e;
  for (vid u = 0; u < n; ++u)
    for (vid v = u + 1; v < n; ++v) e.push_back({u, v});
  return Digraph::from_edges(n, e);
}

inline Digraph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (vid v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Digraph::from_edges(n, e);
}

}  // namespace fx
