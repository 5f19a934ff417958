// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero on any
// failure not listed with --known-failure.
#include <CLI11.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "graphlab/graphlab.hpp"

using namespace glab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double x) { return format_real(x); }

// ---------------------------------------------------------------- 1, 2
Outcome entropy_identity() {
  double worst = 0.0;
  for (int r = 1; r <= 10; ++r)
    for (int s = 0; s <= r; ++s) worst = std::max(worst, std::abs(entropy(make_wrs(r, s)) - (1.0 - 1.0 / r)));
  return {worst <= 1e-12, "max |Ent - (1-1/r)| = " + fmt(worst) + " (tol 1e-12, 1<=r<=10, 0<=s<=r)"};
}

Outcome entropy_increase() {
  int checked = 0;
  int failed = 0;
  double smallest_margin = 1.0;
  for (int t = 1; t <= 8; ++t)
    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
      std::vector<int> diagonal(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i) diagonal[i] = static_cast<int>((mask >> i) & 1u);
      const double margin = entropy(cap_at_half(make_r_form(diagonal))) - (1.0 - 1.0 / t);
      smallest_margin = std::min(smallest_margin, margin);
      ++checked;
      if (!(margin > 0.0)) ++failed;
    }
  return {failed == 0, std::to_string(checked) + " patterns, " + std::to_string(failed) +
                           " not strictly larger, smallest margin " + fmt(smallest_margin)};
}

// ---------------------------------------------------------------- 3
double brute_force_cut_norm(const StepKernel& k) {
  const int b = k.blocks();
  double best = 0.0;
  for (std::uint32_t s = 0; s < (1u << b); ++s)
    for (std::uint32_t t = 0; t < (1u << b); ++t) {
      double v = 0.0;
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
          if (((s >> i) & 1u) && ((t >> j) & 1u)) v += k.measure(i) * k.measure(j) * k.value(i, j);
      best = std::max(best, std::abs(v));
    }
  return best;
}

// Dyadic measures (multiples of 1/32) and values (multiples of 1/64): every
// partial sum is exactly representable, so both computations are exact.
StepKernel random_dyadic_kernel(CounterStream& rng, int k) {
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k), 1);
  for (int extra = 0; extra < 32 - k; ++extra) ++parts[rng.next_below(static_cast<std::uint64_t>(k))];
  std::vector<Rational> m;
  for (auto p : parts) m.emplace_back(p, 32);
  std::vector<double> v(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) v[i * k + j] = v[j * k + i] = (static_cast<double>(rng.next_below(129)) - 64.0) / 64.0;
  return StepKernel(m, v);
}

Outcome cut_norm_oracle() {
  CounterStream rng(SampleSeed{2024, 3});
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = random_dyadic_kernel(rng, 1 + static_cast<int>(rng.next_below(5)));
    if (cut_norm(k) != brute_force_cut_norm(k)) ++mismatches;
  }
  return {mismatches == 0, "100 kernels, k<=5, " + std::to_string(mismatches) + " inexact matches"};
}

// ---------------------------------------------------------------- 4, 5
long exhaustive_triangle_free(int n) {
  const auto pairs = vertex_pairs(n);
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::array<std::array<bool, 8>, 8> adj{};
    for (std::size_t t = 0; t < pairs.size(); ++t)
      adj[pairs[t].first][pairs[t].second] = adj[pairs[t].second][pairs[t].first] = (mask >> t) & 1u;
    bool free = true;
    for (int a = 0; a < n && free; ++a)
      for (int b = a + 1; b < n && free; ++b)
        for (int c = b + 1; c < n && free; ++c) free = !(adj[a][b] && adj[b][c] && adj[a][c]);
    count += free ? 1 : 0;
  }
  return count;
}

Outcome counting_oracle() {
  const ForbiddenFamily k3({complete_graph(3)});
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    const BigInt labeled = count_labeled(k3, n);
    const BigInt unlabeled = count_unlabeled(k3, n);
    const long oracle = exhaustive_triangle_free(n);
    ok = ok && labeled == oracle && unlabeled <= labeled && labeled <= factorial(n) * unlabeled;
    detail += "n=" + std::to_string(n) + ": " + labeled.str() + " (oracle " + std::to_string(oracle) +
              ", unlabeled " + unlabeled.str() + ") ";
  }
  ok = ok && exhaustive_triangle_free(3) == 7 && exhaustive_triangle_free(4) == 41;
  return {ok, detail};
}

Outcome orderly_consistency() {
  const std::vector<std::pair<std::string, ForbiddenFamily>> families{
      {"K3", ForbiddenFamily({complete_graph(3)})},
      {"C4", ForbiddenFamily({cycle_graph(4)})},
      {"P4", ForbiddenFamily({path_graph(4)})},
      {"K3,K4", ForbiddenFamily({complete_graph(3), complete_graph(4)})}};
  int mismatches = 0;
  std::string detail;
  for (const auto& [name, fam] : families) {
    const auto levels = unlabeled_census(fam, 6);
    for (int n = 0; n <= 6; ++n)
      if (labeled_from_census(levels[n], n) != count_labeled_direct(fam, n)) ++mismatches;
    detail += name + "@6=" + labeled_from_census(levels[6], 6).str() + " ";
  }
  return {mismatches == 0, detail + "mismatches " + std::to_string(mismatches)};
}

// ---------------------------------------------------------------- 6
bool bfs_bipartite(const SimpleGraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < g.order(); ++u) {
        if (!g.has_edge(v, u)) continue;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Outcome sampler_laws() {
  const auto w20 = make_wrs(2, 0);
  const auto half = constant_graphon(0.5);
  int non_bipartite = 0;
  int uncontained = 0;
  for (std::uint64_t j = 0; j < 1000; ++j) {
    if (!bfs_bipartite(sample_wrandom(w20, 50, SampleSeed{606, j}))) ++non_bipartite;
    const auto [low, high] = sample_coupled(w20, half, 50, SampleSeed{607, j});
    if (!low.is_edge_subset_of(high)) ++uncontained;
  }
  return {non_bipartite == 0 && uncontained == 0,
          "non-bipartite " + std::to_string(non_bipartite) + "/1000, containment failures " +
              std::to_string(uncontained) + "/1000"};
}

// ---------------------------------------------------------------- 7
// The empirical distribution is the pooled occupation measure of all chains
// after a 1000-step burn-in. Final states alone (one per chain) are reported
// as a diagnostic: with 10^4 draws over 388 states their TV to uniform is
// about 0.079 even for exact uniform draws, so only the chi-square p-value is
// informative there.
Outcome mcmc_uniformity() {
  constexpr int n = 5;
  constexpr int chains = 10'000;
  constexpr int steps = 100'000;
  constexpr int burnin = 1'000;
  const ForbiddenFamily k3({complete_graph(3)});
  const auto pairs = vertex_pairs(n);
  auto mask_of = [&](const SimpleGraph& g) {
    std::uint32_t m = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (g.has_edge(pairs[t].first, pairs[t].second)) m |= 1u << t;
    return m;
  };
  std::vector<int> index(1u << pairs.size(), -1);
  int classes = 0;
  for_each_labeled_member(k3, n, [&](const SimpleGraph& g) { index[mask_of(g)] = classes++; });

  std::vector<std::uint64_t> occupation(static_cast<std::size_t>(classes), 0);
  std::vector<std::uint64_t> finals(static_cast<std::size_t>(classes), 0);
  std::uint64_t outside = 0;
  for (int c = 0; c < chains; ++c) {
    EdgeToggleChain chain(k3, n, SampleSeed{77, static_cast<std::uint64_t>(c)});
    std::uint32_t mask = 0;
    for (int t = 1; t <= steps; ++t) {
      chain.step();
      mask = mask_of(chain.state());
      if (index[mask] < 0) {
        ++outside;
        continue;
      }
      if (t > burnin) ++occupation[index[mask]];
    }
    if (index[mask] >= 0) ++finals[index[mask]];
  }
  auto tv = [&](const std::vector<std::uint64_t>& counts) {
    double total = 0.0;
    for (auto x : counts) total += static_cast<double>(x);
    double d = 0.0;
    for (auto x : counts) d += std::abs(static_cast<double>(x) / total - 1.0 / classes);
    return d / 2.0;
  };
  const double pooled = tv(occupation);
  const double expected = static_cast<double>(chains) / classes;
  double chi2 = 0.0;
  for (auto x : finals) chi2 += (static_cast<double>(x) - expected) * (static_cast<double>(x) - expected) / expected;
  const boost::math::chi_squared dist(classes - 1);
  const double p = boost::math::cdf(boost::math::complement(dist, chi2));
  return {classes == 388 && outside == 0 && pooled < 0.05,
          "class size " + std::to_string(classes) + ", pooled TV " + fmt(pooled) + " (tol 0.05), states outside " +
              std::to_string(outside) + "; final-state TV " + fmt(tv(finals)) + ", chi-square p " + fmt(p)};
}

// ---------------------------------------------------------------- 8
Outcome speed_trend() {
  const auto rows = count_range(ForbiddenFamily({complete_graph(3)}), 8);
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 8; ++n) {
    ok = ok && rows[n].speed_exponent >= 0.5;
    if (n > 3) ok = ok && rows[n].speed_exponent <= rows[n - 1].speed_exponent;
    detail += fmt(rows[n].speed_exponent) + (n < 8 ? " " : "");
  }
  return {ok, "exponents n=3..8: " + detail};
}

// ---------------------------------------------------------------- 9
Outcome convergence_trend() {
  ExperimentConfig c;
  c.family = ForbiddenFamily({complete_graph(3)});
  c.family_label = "K3";
  c.sizes = {20, 40, 80};
  c.samples = 20;
  c.seed = 9;
  const auto report = run_convergence(c);
  std::vector<double> means;
  for (const auto& row : report.rows) means.push_back(std::stod(row[1]));
  double floor = 0.0;
  for (const auto& [k, v] : report.metadata)
    if (k == "noise_floor") floor = std::stod(v);
  const bool ok = means.size() == 3 && means[0] > means[1] && means[1] > means[2] && means[0] > floor;
  return {ok, "means " + fmt(means[0]) + " > " + fmt(means[1]) + " > " + fmt(means[2]) + ", noise floor (n=60) " +
                  fmt(floor)};
}

// ---------------------------------------------------------------- 10
Outcome col_boundary() {
  const bool infinite = coloring_number(ForbiddenFamily{}).is_infinite();
  ExperimentConfig empty;
  empty.sizes = {10};
  bool rejected = false;
  std::string message;
  try {
    run_convergence(empty);
  } catch (const ValidationError& e) {
    message = e.what();
    rejected = message.find("infinity") != std::string::npos;
  }
  ExperimentConfig k3;
  k3.family = ForbiddenFamily({complete_graph(3)});
  k3.sizes = {10};
  const auto col = coloring_number(k3.family);
  const int r = target_partite_rank(k3);
  return {infinite && rejected && col == ExtendedNat(3) && r == 2,
          "col(empty)=" + coloring_number(ForbiddenFamily{}).to_string() + ", rejected=" + (rejected ? "yes" : "no") +
              ", col(K3)-1=" + std::to_string(r)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphlab acceptance suite"};
  std::vector<int> known_failures;
  app.add_option("--known-failure", known_failures,
                 "criterion ids whose failure is documented; still reported as FAIL but not counted in the exit status")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "entropy identity", 1.0, entropy_identity},
      {2, "entropy increase after capping", 1.0, entropy_increase},
      {3, "cut norm equals brute force", 10.0, cut_norm_oracle},
      {4, "labeled count oracle and sandwich", 30.0, counting_oracle},
      {5, "census reconstruction matches direct count", 60.0, orderly_consistency},
      {6, "sampler laws", 30.0, sampler_laws},
      {7, "MCMC uniformity", 600.0, mcmc_uniformity},
      {8, "speed trend", 300.0, speed_trend},
      {9, "convergence trend", 1800.0, convergence_trend},
      {10, "col boundary behaviour", 1.0, col_boundary},
  };
  int failures = 0;
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.pass && in_time;
    const bool known = std::find(known_failures.begin(), known_failures.end(), c.id) != known_failures.end();
    if (!pass) ++failures;
    if (!pass && !known) ++unexpected;
    std::printf("%s [%d] %s: %s; %.2fs (limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed, %d failure(s) outside the known-failure list\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
