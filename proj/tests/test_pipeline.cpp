#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kspan/generators.hpp"
#include "kspan/io.hpp"
#include "kspan/pipeline.hpp"

using namespace kspan;

TEST(Preflight, VertexExamples) {
  PipelineParams a = preflight(250, 1, 0, Mode::vertex);
  EXPECT_EQ(a.trio.t1, 1u);
  EXPECT_EQ(a.trio.t2, 1u);
  EXPECT_EQ(a.trio.d, 30u);
  EXPECT_EQ(a.trio.m, 5u);
  EXPECT_EQ(a.trio.u, Rational(7, 3));

  PipelineParams b = preflight(1100, 2, 3, Mode::vertex);
  EXPECT_EQ(b.trio.t1, 5u);
  EXPECT_EQ(b.trio.t2, 3u);
  EXPECT_EQ(b.trio.d, 165u);
  EXPECT_EQ(b.trio.m, 25u);
  EXPECT_EQ(b.trio.u, Rational(35, 3));

  try {
    preflight(40, 2, 0, Mode::vertex);
    FAIL() << "expected an input error";
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find("200"), std::string::npos);
  }
}

TEST(Preflight, ArcExamples) {
  PipelineParams a = preflight(300, 2, 1, Mode::arc);
  EXPECT_EQ(a.trio.t1, 3u);
  EXPECT_EQ(a.trio.t2, 1u);
  EXPECT_EQ(a.trio.d, 20u);
  EXPECT_EQ(a.trio.m, 15u);
  EXPECT_EQ(a.trio.u, Rational(4, 3));
  EXPECT_THROW(preflight(299, 2, 1, Mode::arc), input_error);
}

TEST(Preflight, PassesEverywhereAboveTheThreshold) {
  for (Mode mode : {Mode::vertex, Mode::arc})
    for (std::size_t k = 1; k <= 6; ++k)
      for (std::size_t dbar = 0; dbar <= 12; ++dbar) {
        std::size_t n = full_threshold(k, dbar, mode);
        EXPECT_NO_THROW(preflight(n, k, dbar, mode)) << k << " " << dbar;
        if (n > 0) EXPECT_THROW(preflight(n - 1, k, dbar, mode), input_error);
      }
}

TEST(SparsifyVertex, TrivialBranch) {
  Digraph dk = gen_dk(2, 6);
  SparsifyResult r = sparsify_vertex(dk, 2);
  EXPECT_EQ(r.report.branch, Branch::trivial);
  EXPECT_EQ(r.graph, dk);
  EXPECT_EQ(r.report.total_edges, 16u);
  EXPECT_TRUE(r.report.verified);
}

TEST(SparsifyVertex, FallbackBranch) {
  Digraph d = gen_random_tournament(120, 1, 3).graph;
  SparsifyResult r = sparsify_vertex(d, 1);
  EXPECT_EQ(r.report.branch, Branch::minimal_fallback);
  EXPECT_LE(r.report.total_edges, 238u);
  EXPECT_TRUE(r.report.verified);
}

TEST(SparsifyVertex, FullPipeline) {
  Digraph d = gen_random_tournament(300, 1, 3).graph;
  SparsifyResult r = sparsify_vertex(d, 1);
  EXPECT_EQ(r.report.branch, Branch::full_pipeline);
  EXPECT_LE(r.report.total_edges, 1100u);
  EXPECT_EQ(r.report.bound_value, 1100u);
  EXPECT_TRUE(r.report.bound_met);
  EXPECT_TRUE(r.report.verified);
  EXPECT_GE(r.report.total_edges, 300u);
  EXPECT_EQ(r.report.total_edges, r.graph.m());
  std::size_t sum = 0;
  for (const auto& [name, c] : r.report.component_edges)
    if (name != "E_abs") sum += c;
  EXPECT_GE(sum, r.report.total_edges);
  for (const char* key : {"paths", "escaper", "E_conn", "E_hub", "E_abs"})
    EXPECT_TRUE(r.report.component_edges.count(key)) << key;

  SparsifyResult again = sparsify_vertex(r.graph, 1);
  EXPECT_LE(again.report.total_edges, r.report.total_edges);
  EXPECT_TRUE(again.report.verified);
}

TEST(SparsifyVertex, Errors) {
  EXPECT_THROW(sparsify_vertex(fx::path_graph(5), 1), infeasible_error);
  EXPECT_THROW(sparsify_vertex(gen_doubled_tree(5, 2, 0), 1), input_error);
  EXPECT_THROW(sparsify_vertex(fx::cycle(5), 0), input_error);
}

TEST(SparsifyArc, DoubledTreeIsKept) {
  Digraph t = gen_doubled_tree(20, 2, 4);
  SparsifyResult r = sparsify_arc(t, 2);
  EXPECT_EQ(r.report.branch, Branch::minimal_fallback);
  EXPECT_EQ(r.graph, t);
  EXPECT_EQ(r.report.total_edges, 76u);
}

TEST(SparsifyArc, FullPipeline) {
  Digraph d = gen_random_tournament(150, 1, 8).graph;
  SparsifyResult r = sparsify_arc(d, 1);
  EXPECT_EQ(r.report.branch, Branch::full_pipeline);
  EXPECT_LE(r.report.total_edges, 150u + 670u);
  EXPECT_TRUE(r.report.verified);
  EXPECT_GE(r.report.total_edges, 150u);
  EXPECT_THROW(sparsify_arc(fx::path_graph(3), 1), infeasible_error);
}

TEST(Sparsify, DeterministicOutputAndReport) {
  Digraph d = gen_random_dense(250, 1, 1, 17).graph;
  SparsifyResult a = sparsify_vertex(d, 1), b = sparsify_vertex(d, 1);
  EXPECT_EQ(to_text(a.graph), to_text(b.graph));
  EXPECT_EQ(report_json(a.report).dump(), report_json(b.report).dump());
}

TEST(Sparsify, ReportFieldOrder) {
  SparsifyResult r = sparsify_vertex(gen_dk(2, 6), 2);
  auto j = report_json(r.report);
  std::vector<std::string> keys;
  for (const auto& [key, v] : j.items()) keys.push_back(key);
  std::vector<std::string> want{"mode",        "n",         "k",
                                "delta_bar",   "branch_taken", "component_edge_counts",
                                "total_edges", "bound_value",  "bound_met",
                                "proof_bound_value", "proof_bound_met", "verified"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j["branch_taken"], "trivial");
}
