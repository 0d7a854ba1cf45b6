#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kspan/kspan.hpp"

using namespace kspan;

namespace {

enum Exit { ok = 0, property_false = 1, bad_input = 2, invariant = 3 };

Digraph load(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return read_graph(in);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << text;
}

Mode parse_mode(const std::string& s) { return s == "arc" ? Mode::arc : Mode::vertex; }

void print_witness(const Witness& w, Mode mode) {
  std::cout << "witness: " << w.from << " cannot reach " << w.to << " after removing";
  if (mode == Mode::vertex)
    for (vid v : w.vertices) std::cout << ' ' << v;
  else
    for (const Edge& e : w.edges) std::cout << ' ' << e.tail << "->" << e.head;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse spanning subgraphs preserving strong k-connectivity"};
  app.require_subcommand(1);

  std::string family, params, in_path = "-", out_path, report_path, suite_path, csv_path, mode_str = "vertex",
                              format = "edges";
  std::uint64_t seed = 0;
  std::size_t k = 1, jobs = 0;
  auto mode_opt = [&](CLI::App* c) {
    c->add_option("--mode", mode_str, "vertex or arc")->check(CLI::IsMember({"vertex", "arc"}));
  };

  auto* gen = app.add_subcommand("generate", "Write an instance from a generator family");
  gen->add_option("--family", family, "dk, doubled_tree, power_cycle_tournament, G_family, T_family, T_lower, "
                                      "random_dense, random_tournament")
      ->required();
  gen->add_option("--params", params, "comma separated name=value list, e.g. n=250,k=2");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path);
  gen->add_option("--format", format)->check(CLI::IsMember({"edges", "dot"}));

  auto* sp = app.add_subcommand("sparsify", "Sparse k-connected spanning subgraph");
  mode_opt(sp);
  sp->add_option("-k", k)->required()->check(CLI::PositiveNumber);
  sp->add_option("-i,--input", in_path);
  sp->add_option("-o,--output", out_path);
  sp->add_option("--report", report_path, "JSON report destination");

  auto* ver = app.add_subcommand("verify", "Check strong k-(arc-)connectivity");
  mode_opt(ver);
  ver->add_option("-k", k)->required()->check(CLI::PositiveNumber);
  ver->add_option("-i,--input", in_path);

  auto* mini = app.add_subcommand("minimal", "Minimally k-(arc-)connected spanning subgraph");
  mode_opt(mini);
  mini->add_option("-k", k)->required()->check(CLI::PositiveNumber);
  mini->add_option("-i,--input", in_path);
  mini->add_option("-o,--output", out_path);
  mini->add_option("--seed", seed, "deletion order seed (0 keeps the degree order)");

  auto* hkd = app.add_subcommand("hkd", "Fewest edges with all in- and out-degrees at least k");
  hkd->add_option("-k", k)->required()->check(CLI::PositiveNumber);
  hkd->add_option("-i,--input", in_path);
  hkd->add_option("-o,--output", out_path, "write an optimal subgraph");

  auto* bench = app.add_subcommand("bench", "Run a JSON suite on a worker pool");
  bench->add_option("--suite", suite_path)->required();
  bench->add_option("--jobs", jobs, "0 = hardware threads; KSPAN_JOBS overrides");
  bench->add_option("--csv", csv_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : bad_input;
  }
  Mode mode = parse_mode(mode_str);

  try {
    if (*gen) {
      Generated g = generate({family, parse_params(params), seed});
      std::ostringstream os;
      if (format == "dot")
        write_dot(os, g.graph);
      else
        write_graph(os, g.graph);
      emit(out_path, os.str());
      if (g.attempts > 1) std::cerr << "attempts: " << g.attempts << '\n';
    } else if (*sp) {
      Digraph d = load(in_path);
      SparsifyResult r = detail::sparsify(d, k, mode);
      emit(out_path, to_text(r.graph));
      std::string rep = report_json(r.report).dump(2) + "\n";
      if (report_path.empty())
        std::cerr << rep;
      else
        emit(report_path, rep);
    } else if (*ver) {
      Digraph d = load(in_path);
      Verdict v = is_connected(d, k, mode);
      std::cout << (v ? "true" : "false") << '\n';
      if (!v) {
        print_witness(*v.witness, mode);
        return property_false;
      }
    } else if (*mini) {
      Digraph d = load(in_path);
      MinimalSubgraph m = seed ? minimal_subgraph(d, k, mode, seed) : minimal_subgraph(d, k, mode);
      emit(out_path, to_text(m.graph));
      std::cerr << "edges: " << m.graph.m() << " (deleted " << m.deletion_log.size() << ")\n";
    } else if (*hkd) {
      Digraph d = load(in_path);
      DegreeOptimum o = min_degree_spanning_subgraph(d, k, !d.simple());
      std::cout << o.h << '\n';
      if (!out_path.empty()) emit(out_path, to_text(o.graph));
    } else if (*bench) {
      std::ifstream in(suite_path);
      if (!in) throw input_error("cannot open " + suite_path);
      auto suite = read_suite(in);
      auto rows = run_bench(suite, resolve_jobs(jobs));
      std::ostringstream os;
      write_csv(os, rows);
      emit(csv_path, os.str());
      for (const BenchRow& r : rows)
        if (!r.error.empty() || !r.report.bound_met) return property_false;
    }
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    print_witness(e.witness(), mode);
    return property_false;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return bad_input;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return invariant;
  } catch (const construction_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return invariant;
  }
  return ok;
}
