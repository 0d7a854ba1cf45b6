#pragma once

#include <atomic>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "kspan/generators.hpp"
#include "kspan/io.hpp"
#include "kspan/pipeline.hpp"

namespace kspan {

struct BenchInstance {
  std::string name;
  GeneratorSpec gen;
  Mode mode = Mode::vertex;
  std::size_t k = 1;
};

struct BenchRow {
  BenchInstance inst;
  std::size_t n = 0, m = 0;
  SparsifyReport report;
  std::string output_hash;
  std::string error;
};

// {"instances": [{"name", "family", "params": {..}, "seed", "mode", "k"}, ...]}
inline std::vector<BenchInstance> read_suite(std::istream& is) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("suite: ") + e.what());
  }
  if (!j.contains("instances") || !j["instances"].is_array()) throw input_error("suite: missing 'instances' array");
  std::vector<BenchInstance> r;
  try {
    for (const auto& x : j["instances"]) {
      BenchInstance b;
      b.gen.family = x.at("family").get<std::string>();
      b.name = x.value("name", b.gen.family + "_" + std::to_string(r.size()));
      if (x.contains("params"))
        for (const auto& [key, v] : x["params"].items()) b.gen.params[key] = v.get<std::int64_t>();
      b.gen.seed = x.value("seed", std::uint64_t{0});
      std::string mode = x.value("mode", std::string("vertex"));
      if (mode != "vertex" && mode != "arc") throw input_error("suite: mode must be vertex or arc");
      b.mode = mode == "arc" ? Mode::arc : Mode::vertex;
      b.k = x.value("k", std::size_t{1});
      r.push_back(std::move(b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("suite: ") + e.what());
  }
  return r;
}

// KSPAN_JOBS overrides the requested count; 0 means all hardware threads.
inline std::size_t resolve_jobs(std::size_t requested) {
  if (const char* env = std::getenv("KSPAN_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) requested = static_cast<std::size_t>(v);
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

inline BenchRow run_instance(const BenchInstance& inst) {
  BenchRow row;
  row.inst = inst;
  try {
    Digraph d = generate(inst.gen).graph;
    row.n = d.n();
    row.m = d.m();
    SparsifyResult r = inst.mode == Mode::vertex ? sparsify_vertex(d, inst.k) : sparsify_arc(d, inst.k);
    row.report = r.report;
    row.output_hash = hex64(graph_hash(r.graph));
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

inline std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite, std::size_t jobs) {
  std::vector<BenchRow> rows(suite.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < suite.size();) rows[i] = run_instance(suite[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(jobs, suite.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "name,family,seed,mode,k,n,m,delta_bar,branch,total_edges,bound_value,bound_met,verified,output_hash,error\n";
  for (const BenchRow& r : rows) {
    std::string err = r.error;
    for (char& c : err)
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    os << r.inst.name << ',' << r.inst.gen.family << ',' << r.inst.gen.seed << ',' << to_string(r.inst.mode) << ','
       << r.inst.k << ',' << r.n << ',' << r.m << ',' << r.report.delta_bar << ','
       << (r.error.empty() ? to_string(r.report.branch) : "") << ',' << r.report.total_edges << ','
       << r.report.bound_value << ',' << r.report.bound_met << ',' << r.report.verified << ',' << r.output_hash
       << ',' << err << '\n';
  }
}

}  // namespace kspan
