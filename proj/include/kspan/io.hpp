#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kspan/errors.hpp"
#include "kspan/graph.hpp"
#include "kspan/pipeline.hpp"

namespace kspan {

// Text edge list:
//   digraph|multigraph n m
//   tail head [mult]
// 0-indexed; m counts copies. A "digraph" may not contain parallel copies.
inline void write_graph(std::ostream& os, const Digraph& d) {
  os << (d.simple() ? "digraph" : "multigraph") << ' ' << d.n() << ' ' << d.m() << '\n';
  for (const Pair& p : d.pairs()) {
    os << p.tail << ' ' << p.head;
    if (p.mult > 1) os << ' ' << p.mult;
    os << '\n';
  }
}

inline std::string to_text(const Digraph& d) {
  std::ostringstream os;
  write_graph(os, d);
  return os.str();
}

inline Digraph read_graph(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw input_error("line " + std::to_string(lineno) + ": " + why);
  };
  auto next = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next()) throw input_error("empty graph document");
  std::istringstream head(line);
  std::string kind;
  long long n = -1, m = -1;
  if (!(head >> kind >> n >> m) || n < 0 || m < 0) fail("expected header 'digraph|multigraph n m'");
  if (kind != "digraph" && kind != "multigraph") fail("unknown graph kind '" + kind + "'");
  std::string extra;
  if (head >> extra) fail("trailing text in header");
  std::vector<Pair> pairs;
  std::size_t total = 0;
  while (next()) {
    std::istringstream rec(line);
    long long u = -1, v = -1, c = 1;
    if (!(rec >> u >> v)) fail("expected 'tail head [mult]'");
    std::string mult;
    if (rec >> mult) {
      std::size_t used = 0;
      try {
        c = std::stoll(mult, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != mult.size()) fail("bad multiplicity '" + mult + "'");
    }
    if (rec >> extra) fail("trailing text in record");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u == v) fail("loop");
    if (c < 1) fail("multiplicity must be positive");
    if (kind == "digraph" && c > 1) fail("parallel copies in a digraph");
    pairs.push_back({static_cast<vid>(u), static_cast<vid>(v), static_cast<std::uint32_t>(c)});
    total += static_cast<std::size_t>(c);
  }
  if (total != static_cast<std::size_t>(m))
    throw input_error("header says " + std::to_string(m) + " edges, body has " + std::to_string(total));
  Digraph d = Digraph::from_pairs(static_cast<std::size_t>(n), std::move(pairs));
  if (kind == "digraph" && !d.simple()) throw input_error("repeated edge in a digraph");
  return d;
}

inline Digraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

inline void write_dot(std::ostream& os, const Digraph& d, const std::string& name = "D") {
  os << "digraph " << name << " {\n";
  for (vid v = 0; v < d.n(); ++v) os << "  " << v << ";\n";
  for (const Pair& p : d.pairs()) {
    os << "  " << p.tail << " -> " << p.head;
    if (p.mult > 1) os << " [label=\"" << p.mult << "\"]";
    os << ";\n";
  }
  os << "}\n";
}

// FNV-1a over the canonical text form.
inline std::uint64_t graph_hash(const Digraph& d) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_text(d)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 15];
  return s;
}

inline nlohmann::ordered_json report_json(const SparsifyReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["k"] = r.k;
  j["delta_bar"] = r.delta_bar;
  j["branch_taken"] = to_string(r.branch);
  j["component_edge_counts"] = nlohmann::ordered_json::object();
  for (const auto& [name, c] : r.component_edges) j["component_edge_counts"][name] = c;
  j["total_edges"] = r.total_edges;
  j["bound_value"] = r.bound_value;
  j["bound_met"] = r.bound_met;
  j["proof_bound_value"] = r.proof_bound_value;
  j["proof_bound_met"] = r.proof_bound_met;
  if (r.absorber_bound) {
    j["absorber_bound"] = *r.absorber_bound;
    j["absorber_bound_met"] = *r.absorber_bound_met;
    j["linkage_achieved_edges"] = r.linkage_achieved;
    j["linkage_target_edges"] = r.linkage_target;
  }
  j["verified"] = r.verified;
  return j;
}

}  // namespace kspan
