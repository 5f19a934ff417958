// SPDX-License-Identifier: Apache-2.0
//
// Experiment drivers: typical structure of uniform F-free graphs, speed
// exponents, entropy audit of R_t graphons, and the monotone coupling.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphlab/coloring.hpp"
#include "graphlab/cut_norm.hpp"
#include "graphlab/errors.hpp"
#include "graphlab/family.hpp"
#include "graphlab/forb.hpp"
#include "graphlab/graphon.hpp"
#include "graphlab/report.hpp"
#include "graphlab/rng.hpp"
#include "graphlab/sampler.hpp"

namespace glab {

struct ExperimentConfig {
  ForbiddenFamily family;
  std::string family_label = "(inline)";
  std::vector<int> sizes;
  int samples = 1;
  std::optional<std::uint64_t> steps;   // fixed MCMC length; overrides burn-in when set
  std::optional<std::uint64_t> burnin;  // default 20 * P * ln P with P = C(n,2)
  std::optional<std::uint64_t> gap;     // default P
  std::uint64_t seed = 1;
  std::optional<int> r_override;
  bool compare_partite = false;  // run_speed: also count C(r,0)
  int calibration_order = 60;
  int calibration_samples = 20;

  void validate() const {
    if (sizes.empty()) throw ValidationError("config: sizes must be nonempty");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] < 1) throw ValidationError("config: sizes must be positive");
      if (i > 0 && sizes[i] <= sizes[i - 1]) throw ValidationError("config: sizes must be strictly increasing");
    }
    if (samples < 1) throw ValidationError("config: samples must be >= 1");
    if (r_override && *r_override < 1) throw ValidationError("config: r override must be >= 1");
  }
};

inline std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

inline std::uint64_t default_burnin(int n) {
  const double p = static_cast<double>(pair_count(n));
  return p < 2 ? 0 : static_cast<std::uint64_t>(std::ceil(20.0 * p * std::log(p)));
}

inline std::uint64_t default_gap(int n) { return std::max<std::uint64_t>(1, pair_count(n)); }

// ---------------------------------------------------------------------------
// Distance from a graph to W*_{r,0}

struct PartitionSearch {
  int restarts = 16;
};

// cost = (edges inside parts) + sum_{p<q} |e(P_p, P_q) - |P_p||P_q|/2|
class PartitionCost {
 public:
  PartitionCost(const SimpleGraph& g, int r, std::vector<int> part) : g_(&g), r_(r), part_(std::move(part)) {
    sizes_.assign(static_cast<std::size_t>(r), 0);
    edges_.assign(static_cast<std::size_t>(r) * r, 0);
    for (int p : part_) ++sizes_[p];
    for (const auto& [a, b] : g.edges()) bump(part_[a], part_[b], 1);
  }

  [[nodiscard]] double cost() const { return cost_of(sizes_, edges_); }

  // Cost after moving v to part q (no state change).
  [[nodiscard]] double cost_if_moved(int v, int q) const {
    auto sizes = sizes_;
    auto edges = edges_;
    apply_move(v, q, sizes, edges);
    return cost_of(sizes, edges);
  }

  void move(int v, int q) {
    apply_move(v, q, sizes_, edges_);
    part_[v] = q;
  }

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return part_; }

 private:
  void bump(int p, int q, long delta) {
    edges_[static_cast<std::size_t>(std::min(p, q)) * r_ + std::max(p, q)] += delta;
  }

  [[nodiscard]] std::vector<long> neighbor_counts(int v) const {
    std::vector<long> nbr(static_cast<std::size_t>(r_), 0);
    for (int u = 0; u < g_->order(); ++u)
      if (g_->has_edge(v, u)) ++nbr[part_[u]];
    return nbr;
  }

  void apply_move(int v, int q, std::vector<long>& sizes, std::vector<long>& edges) const {
    const int p = part_[v];
    if (p == q) return;
    const auto nbr = neighbor_counts(v);
    auto at = [&](int x, int y) -> long& {
      return edges[static_cast<std::size_t>(std::min(x, y)) * r_ + std::max(x, y)];
    };
    for (int t = 0; t < r_; ++t) {
      at(p, t) -= nbr[t];
      at(q, t) += nbr[t];
    }
    --sizes[p];
    ++sizes[q];
  }

  [[nodiscard]] double cost_of(const std::vector<long>& sizes, const std::vector<long>& edges) const {
    double c = 0.0;
    for (int p = 0; p < r_; ++p) {
      c += static_cast<double>(edges[static_cast<std::size_t>(p) * r_ + p]);
      for (int q = p + 1; q < r_; ++q) {
        const double expect = 0.5 * static_cast<double>(sizes[p]) * static_cast<double>(sizes[q]);
        c += std::abs(static_cast<double>(edges[static_cast<std::size_t>(p) * r_ + q]) - expect);
      }
    }
    return c;
  }

  const SimpleGraph* g_;
  int r_;
  std::vector<int> part_;
  std::vector<long> sizes_;
  std::vector<long> edges_;
};

// Best r-partition found by first-improvement single-vertex moves from
// balanced seeded starts.
inline std::vector<int> search_partition(const SimpleGraph& g, int r, SampleSeed seed, PartitionSearch opts = {}) {
  const int n = g.order();
  CounterStream rng(seed);
  std::vector<int> best;
  double best_cost = 0.0;
  for (int attempt = 0; attempt < opts.restarts; ++attempt) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> part(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) part[order[i]] = i % r;
    PartitionCost state(g, r, std::move(part));
    double current = state.cost();
    bool improved = true;
    while (improved) {
      improved = false;
      for (int v : order) {
        for (int q = 0; q < r; ++q) {
          if (q == state.parts()[v]) continue;
          const double c = state.cost_if_moved(v, q);
          if (c < current) {
            state.move(v, q);
            current = c;
            improved = true;
            break;
          }
        }
      }
    }
    if (best.empty() || current < best_cost) {
      best = state.parts();
      best_cost = current;
    }
  }
  return best;
}

// Estimated cut distance between g and W*_{r,0}: vertices are laid out part by
// part according to the searched partition, and the cut norm of the
// difference kernel on the common refinement is computed exactly when it has
// at most 20 cells and hill-climbed otherwise.
inline double distance_to_partite_limit(const SimpleGraph& g, int r, SampleSeed seed, PartitionSearch opts = {}) {
  const int n = g.order();
  const auto part = search_partition(g, r, seed.child(0), opts);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return part[a] < part[b]; });
  std::vector<int> new_label(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) new_label[order[p]] = p;
  const auto kernel = difference(empirical_graphon(g.relabeled(new_label)), make_wrs(r, 0));
  if (kernel.blocks() <= kCutNormExactThreshold) return cut_norm(kernel);
  return cut_norm_estimate(kernel, opts.restarts, seed.child(1));
}

// Mean estimator output on G(n, W*_{r,0}) samples.
inline double calibrate_noise_floor(int r, int n, int samples, SampleSeed seed) {
  const auto w = make_wrs(r, 0);
  std::vector<double> d;
  for (int j = 0; j < samples; ++j) {
    const auto s = seed.child(static_cast<std::uint64_t>(j));
    d.push_back(distance_to_partite_limit(sample_wrandom(w, n, s.child(0)), r, s.child(1)));
  }
  return summarize(d).mean;
}

inline double lag_autocorrelation(std::span<const double> xs) {
  const auto s = summarize(xs);
  if (xs.size() < 3) return 0.0;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    den += (xs[i] - s.mean) * (xs[i] - s.mean);
    if (i + 1 < xs.size()) num += (xs[i] - s.mean) * (xs[i + 1] - s.mean);
  }
  return den == 0.0 ? 0.0 : num / den;
}

// r = col(F) - 1 unless overridden.
inline int target_partite_rank(const ExperimentConfig& config) {
  if (config.r_override) return *config.r_override;
  const auto col = coloring_number(config.family);
  if (col.is_infinite()) {
    throw ValidationError(
        "empty forbidden family: Forb({}) is the class of all graphs, col({}) = infinity, so r = col - 1 is "
        "infinite and there is no finite target W*_{r,0}");
  }
  if (col.value() - 1 < 1) {
    throw ValidationError("col(F) = " + col.to_string() +
                          " gives r = col - 1 = 0; W*_{0,s} is undefined (an edgeless member leaves only finitely many F-free graphs)");
  }
  return col.value() - 1;
}

inline ExperimentReport run_convergence(const ExperimentConfig& config) {
  config.validate();
  const int r = target_partite_rank(config);
  const SampleSeed base{config.seed, 0};

  ExperimentReport report;
  report.note("experiment", "convergence");
  report.note("family", config.family_label);
  report.note("r", std::to_string(r));
  report.note("target", "W*_{" + std::to_string(r) + ",0}");
  report.note("seed", std::to_string(config.seed));
  report.note("sampler", "exact enumeration for n <= 6; lazy edge-toggle MCMC from the edgeless graph otherwise");
  report.note("burnin_default", "ceil(20 * P * ln P), P = C(n,2)");
  report.note("gap_default", "P");
  report.note("partition_search", "16 balanced seeded restarts, first-improvement single-vertex moves");
  report.note("distance", "upper bound over vertex layouts; cut norm exact for <= 20 cells, hill-climbed beyond");
  report.note("rate", "convergence in probability carries no rate; only the trend across n is meaningful");
  const double floor =
      calibrate_noise_floor(r, config.calibration_order, config.calibration_samples, SampleSeed{config.seed, 1});
  report.note("noise_floor_n", std::to_string(config.calibration_order));
  report.note("noise_floor", format_real(floor));
  report.columns = {"n",      "mean_distance", "sd_distance",  "samples",          "method",
                    "burnin", "gap",           "mean_density", "edge_autocorr_lag", "calibration_mean"};

  for (int n : config.sizes) {
    const bool exact = n <= 6;
    const std::uint64_t burnin = config.steps.value_or(config.burnin.value_or(default_burnin(n)));
    const std::uint64_t gap = config.gap.value_or(default_gap(n));
    std::vector<double> distances;
    std::vector<double> densities;
    for (int j = 0; j < config.samples; ++j) {
      const auto s = base.child(static_cast<std::uint64_t>(n)).child(static_cast<std::uint64_t>(j));
      const SimpleGraph g = exact ? exact_uniform_sample(config.family, n, s.child(0))
                                  : mcmc_sample(config.family, n, burnin, s.child(0));
      distances.push_back(distance_to_partite_limit(g, r, s.child(1)));
      densities.push_back(n >= 2 ? static_cast<double>(g.edge_count()) / static_cast<double>(pair_count(n)) : 0.0);
    }
    // Edge-count autocorrelation at lag `gap` along one continued chain.
    double autocorr = 0.0;
    if (!exact) {
      EdgeToggleChain chain(config.family, n, base.child(static_cast<std::uint64_t>(n)).child(1u << 30));
      chain.run(burnin);
      std::vector<double> trace;
      for (int t = 0; t < 40; ++t) {
        chain.run(gap);
        trace.push_back(static_cast<double>(chain.state().edge_count()));
      }
      autocorr = lag_autocorrelation(trace);
    }
    const double calibration =
        calibrate_noise_floor(r, n, config.samples, SampleSeed{config.seed, 2}.child(static_cast<std::uint64_t>(n)));
    const auto d = summarize(distances);
    report.rows.push_back({std::to_string(n), format_real(d.mean), format_real(d.stddev), std::to_string(d.count),
                           exact ? "exact" : "mcmc", exact ? "0" : std::to_string(burnin),
                           exact ? "0" : std::to_string(gap), format_real(summarize(densities).mean),
                           format_real(autocorr), format_real(calibration)});
  }
  return report;
}

inline ExperimentReport run_speed(const ExperimentConfig& config, const CountBudget& budget = {}) {
  config.validate();
  ExperimentReport report;
  report.note("experiment", "speed");
  report.note("family", config.family_label);
  const auto col = coloring_number(config.family);
  report.note("col", col.to_string());
  std::optional<int> r;
  if (config.r_override) r = *config.r_override;
  else if (col.is_finite() && col.value() >= 2) r = col.value() - 1;
  if (col.is_finite()) report.note("expected_limit_exponent", format_real(1.0 - 1.0 / (col.value() - 1.0)));
  else report.note("expected_limit_exponent", "1");
  report.columns = {"n", "labeled_count", "unlabeled_count", "speed_exponent"};
  const bool partite = config.compare_partite && r.has_value();
  if (partite) {
    report.note("partite_class", "C(" + std::to_string(*r) + ",0)");
    report.columns.insert(report.columns.end(), {"partite_labeled_count", "ratio"});
  }

  const auto levels = unlabeled_census(config.family, config.sizes.back(), budget);
  for (int n : config.sizes) {
    const BigInt labeled = labeled_from_census(levels[n], n);
    std::vector<std::string> row{std::to_string(n), labeled.str(), std::to_string(levels[n].size()),
                                 n >= 2 ? format_real(speed_exponent_of(labeled, n)) : ""};
    if (partite) {
      const int rank = *r;
      const BigInt part =
          labeled_from_census(levels[n], n, [rank](const SimpleGraph& g) { return crs_member(g, rank, 0).has_value(); });
      row.push_back(part.str());
      row.push_back(part == 0 ? "" : format_real(std::exp2(log2_big(labeled) - log2_big(part))));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// Every graphon of R_t in W*-form for t <= tmax: entropy equals 1 - 1/t, and
// capping at 1/2 strictly increases it whenever some diagonal block is 1.
inline ExperimentReport run_entropy_audit(int tmax, double tolerance = 1e-12) {
  if (tmax < 1 || tmax > 8) throw ValidationError("entropy audit: tmax must be in 1..8");
  ExperimentReport report;
  report.note("experiment", "entropy_audit");
  report.note("tmax", std::to_string(tmax));
  report.note("tolerance", format_real(tolerance));
  report.columns = {"t", "pattern", "ones", "entropy", "expected", "capped_entropy", "margin", "status"};
  for (int t = 1; t <= tmax; ++t) {
    const double expected = 1.0 - 1.0 / t;
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
      std::vector<int> diagonal(static_cast<std::size_t>(t));
      std::string pattern;
      for (int i = 0; i < t; ++i) {
        diagonal[i] = static_cast<int>((mask >> i) & 1u);
        pattern += diagonal[i] ? '1' : '0';
      }
      const int ones = std::popcount(mask);
      const auto w = make_r_form(diagonal);
      const double ent = entropy(w);
      bool ok = std::abs(ent - expected) <= tolerance;
      std::string capped;
      std::string margin;
      if (ones > 0) {
        const double after = entropy(cap_at_half(w));
        ok = ok && after > expected;
        capped = format_real(after);
        margin = format_real(after - expected);
      } else {
        ok = ok && cap_at_half(w) == w;
      }
      if (!ok) ++report.violations;
      report.rows.push_back({std::to_string(t), pattern, std::to_string(ones), format_real(ent), format_real(expected),
                             capped, margin, ok ? "ok" : "VIOLATION"});
    }
  }
  report.note("violations", std::to_string(report.violations));
  return report;
}

inline ExperimentReport run_coupling_demo(const ExperimentConfig& config, const StepGraphon& low,
                                          const StepGraphon& high) {
  config.validate();
  if (!pointwise_leq(low, high)) throw ValidationError("coupling: first graphon is not <= second pointwise");
  ExperimentReport report;
  report.note("experiment", "coupling");
  report.note("seed", std::to_string(config.seed));
  report.columns = {"n", "samples", "contained", "identical", "density_low", "density_high"};
  const SampleSeed base{config.seed, 3};
  for (int n : config.sizes) {
    std::size_t contained = 0;
    std::size_t identical = 0;
    std::vector<double> dl;
    std::vector<double> dh;
    for (int j = 0; j < config.samples; ++j) {
      const auto [a, b] =
          sample_coupled(low, high, n, base.child(static_cast<std::uint64_t>(n)).child(static_cast<std::uint64_t>(j)));
      if (a.is_edge_subset_of(b)) ++contained;
      else throw std::logic_error("coupling produced a pair violating edge containment");
      if (a == b) ++identical;
      const double pairs = n >= 2 ? static_cast<double>(pair_count(n)) : 1.0;
      dl.push_back(static_cast<double>(a.edge_count()) / pairs);
      dh.push_back(static_cast<double>(b.edge_count()) / pairs);
    }
    report.rows.push_back({std::to_string(n), std::to_string(config.samples), std::to_string(contained),
                           std::to_string(identical), format_real(summarize(dl).mean), format_real(summarize(dh).mean)});
  }
  return report;
}

}  // namespace glab
