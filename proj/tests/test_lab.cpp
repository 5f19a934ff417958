// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <string>

#include "graphlab/lab.hpp"

using namespace glab;

namespace {

ExperimentConfig triangle_config(std::vector<int> sizes, int samples) {
  ExperimentConfig c;
  c.family = ForbiddenFamily({complete_graph(3)});
  c.family_label = "K3";
  c.sizes = std::move(sizes);
  c.samples = samples;
  return c;
}

}  // namespace

TEST(EntropyAudit, Examples) {
  const auto report = run_entropy_audit(2);
  // t=2 rows: 00, 10, 01, 11; pattern "10" caps to entropy 0.75
  ASSERT_EQ(report.rows.size(), 2u + 4u);
  EXPECT_EQ(report.rows[0][1], "0");
  EXPECT_EQ(report.rows[1][1], "1");
  EXPECT_EQ(report.rows[1][5], "1");  // capping W=1 gives the constant 1/2
  EXPECT_EQ(report.rows[3][1], "10");
  EXPECT_EQ(report.rows[3][3], "0.5");
  EXPECT_EQ(report.rows[3][5], "0.75");
  EXPECT_EQ(report.violations, 0u);
}

TEST(EntropyAudit, NoViolationsUpToEight) {
  const auto report = run_entropy_audit(8);
  EXPECT_EQ(report.rows.size(), 510u);
  EXPECT_EQ(report.violations, 0u);
  EXPECT_THROW(run_entropy_audit(9), ValidationError);
  EXPECT_THROW(run_entropy_audit(0), ValidationError);
}

TEST(Coupling, Examples) {
  ExperimentConfig c;
  c.sizes = {10, 30};
  c.samples = 25;
  const auto report = run_coupling_demo(c, make_wrs(2, 0), constant_graphon(0.5));
  ASSERT_EQ(report.rows.size(), 2u);
  for (const auto& row : report.rows) EXPECT_EQ(row[1], row[2]);
  const auto same = run_coupling_demo(c, constant_graphon(0.5), constant_graphon(0.5));
  for (const auto& row : same.rows) EXPECT_EQ(row[3], "25");
  EXPECT_THROW(run_coupling_demo(c, constant_graphon(0.5), make_wrs(2, 0)), ValidationError);
  const auto extremes = run_coupling_demo(c, constant_graphon(0.0), constant_graphon(1.0));
  for (const auto& row : extremes.rows) {
    EXPECT_EQ(row[2], "25");
    EXPECT_EQ(row[4], "0");
    EXPECT_EQ(row[5], "1");
  }
}

TEST(Convergence, RankSelection) {
  EXPECT_EQ(target_partite_rank(triangle_config({10}, 1)), 2);
  auto k4 = triangle_config({10}, 1);
  k4.family = ForbiddenFamily({complete_graph(4)});
  EXPECT_EQ(target_partite_rank(k4), 3);
  auto empty = triangle_config({10}, 1);
  empty.family = ForbiddenFamily{};
  EXPECT_THROW(run_convergence(empty), ValidationError);
  try {
    run_convergence(empty);
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("infinity"), std::string::npos);
  }
  // col({K2}) = 2 targets the zero graphon W*_{1,0}
  auto edge = triangle_config({10}, 1);
  edge.family = ForbiddenFamily({complete_graph(2)});
  EXPECT_EQ(target_partite_rank(edge), 1);
  // an edgeless member gives col = 1 and r = 0
  auto edgeless = triangle_config({10}, 1);
  edgeless.family = ForbiddenFamily({SimpleGraph(3)});
  EXPECT_THROW(run_convergence(edgeless), ValidationError);
}

TEST(Convergence, SizesValidated) {
  EXPECT_THROW(run_convergence(triangle_config({}, 1)), ValidationError);
  EXPECT_THROW(run_convergence(triangle_config({10, 10}, 1)), ValidationError);
  EXPECT_THROW(run_convergence(triangle_config({0, 10}, 1)), ValidationError);
  EXPECT_THROW(run_convergence(triangle_config({10}, 0)), ValidationError);
}

TEST(Convergence, ReportShapeAndDeterminism) {
  auto c = triangle_config({5, 12}, 3);
  c.calibration_order = 20;
  c.calibration_samples = 3;
  const auto a = run_convergence(c);
  const auto b = run_convergence(c);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  ASSERT_EQ(a.rows.size(), 2u);
  EXPECT_EQ(a.rows[0][4], "exact");
  EXPECT_EQ(a.rows[1][4], "mcmc");
  EXPECT_EQ(a.rows[1][5], std::to_string(default_burnin(12)));
  c.seed = 2;
  EXPECT_NE(run_convergence(c).to_csv(), a.to_csv());
}

TEST(Convergence, DistanceOfPlantedBipartiteIsSmall) {
  const auto w = make_wrs(2, 0);
  const auto g = sample_wrandom(w, 60, SampleSeed{5, 0});
  EXPECT_LT(distance_to_partite_limit(g, 2, SampleSeed{5, 1}), 0.08);
  // a clique is far from W*_{2,0}
  EXPECT_GT(distance_to_partite_limit(complete_graph(20), 2, SampleSeed{5, 2}), 0.4);
}

TEST(Convergence, CalibrationBelowBound) {
  EXPECT_LT(calibrate_noise_floor(2, 60, 5, SampleSeed{9, 0}), 0.08);
}

TEST(Partition, RecoversPlantedBipartition) {
  const auto w = make_wrs(2, 0);
  const SampleSeed seed{21, 0};
  const auto g = sample_wrandom(w, 40, seed);
  const auto latent = sample_latent_blocks(w, 40, seed);
  const auto part = search_partition(g, 2, SampleSeed{21, 1});
  int agree = 0;
  for (int v = 0; v < 40; ++v) agree += part[v] == latent[v] ? 1 : 0;
  EXPECT_GE(std::max(agree, 40 - agree), 38);
}

TEST(Speed, ReportRows) {
  auto c = triangle_config({3, 4, 5}, 1);
  c.compare_partite = true;
  const auto report = run_speed(c);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0][1], "7");
  EXPECT_EQ(report.rows[1][1], "41");
  EXPECT_EQ(report.rows[2][1], "388");
  EXPECT_EQ(report.rows[0][2], "3");
  // bipartite labeled graphs on 3 and 4 vertices
  EXPECT_EQ(report.rows[0][4], "7");
  EXPECT_EQ(report.rows[1][4], "41");
  // 5 vertices: triangle-free but not bipartite means containing C5, 12 labeled copies
  EXPECT_EQ(report.rows[2][4], "376");
}

TEST(Lag, Autocorrelation) {
  const std::vector<double> alternating{1, -1, 1, -1, 1, -1};
  EXPECT_LT(lag_autocorrelation(alternating), -0.5);
  const std::vector<double> flat{2, 2, 2};
  EXPECT_EQ(lag_autocorrelation(flat), 0.0);
}

TEST(Report, CsvLayout) {
  ExperimentReport r;
  r.note("a", "1");
  r.columns = {"x", "y"};
  r.rows = {{"1", "2"}};
  EXPECT_EQ(r.to_csv(), "# a=1\nx,y\n1,2\n");
  EXPECT_EQ(format_real(0.1), "0.1");
}

TEST(Convergence, BalancedHalfDensityBipartiteIsWithinNoiseFloor) {
  const double floor = calibrate_noise_floor(2, 60, 20, SampleSeed{1, 1});
  CounterStream rng(SampleSeed{31, 0});
  for (int trial = 0; trial < 5; ++trial) {
    // halves of 30; exactly 450 of the 900 cross pairs, placed uniformly
    std::vector<std::pair<int, int>> cross;
    for (int a = 0; a < 30; ++a)
      for (int b = 30; b < 60; ++b) cross.emplace_back(a, b);
    for (std::size_t i = cross.size() - 1; i > 0; --i) std::swap(cross[i], cross[rng.next_below(i + 1)]);
    cross.resize(450);
    const auto g = SimpleGraph::from_edges(60, cross);
    EXPECT_LE(distance_to_partite_limit(g, 2, SampleSeed{32, static_cast<std::uint64_t>(trial)}), floor);
  }
}
