// SPDX-License-Identifier: Apache-2.0
//
// graphlab: command-line front end for the graph-limit laboratory.
// Exit codes: 0 success, 2 validation error, 3 budget error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphlab/graphlab.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string family;
  std::vector<std::string> graphons;
  std::optional<int> n;
  std::vector<int> sizes;
  int samples = 1;
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> burnin;
  std::optional<std::uint64_t> gap;
  std::uint64_t seed = 1;
  std::optional<int> r;
  std::optional<int> s;
  int tmax = 8;
  std::string mode = "exact";
  bool partite = false;
  std::string out;
  std::string config;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw glab::ValidationError("cannot write " + opt.out);
  f << text;
}

// Values from --config fill any option not given on the command line.
void apply_config(CLI::App& app, Options& opt) {
  if (opt.config.empty()) return;
  std::ifstream in(opt.config);
  if (!in) throw glab::ValidationError("cannot open config " + opt.config);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw glab::ValidationError("config " + opt.config + ": " + e.what());
  }
  auto unset = [&](const char* name) {
    for (auto* sub : app.get_subcommands()) {
      try {
        if (sub->get_option(std::string("--") + name)->count() > 0) return false;
      } catch (const CLI::OptionNotFound&) {
      }
    }
    return doc.contains(name);
  };
  try {
    if (unset("family")) opt.family = doc["family"].get<std::string>();
    if (unset("graphon")) {
      opt.graphons.clear();
      const auto& g = doc["graphon"];
      if (g.is_array()) {
        for (const auto& x : g) opt.graphons.push_back(x.get<std::string>());
      } else {
        opt.graphons.push_back(g.get<std::string>());
      }
    }
    if (unset("n")) opt.n = doc["n"].get<int>();
    if (unset("sizes")) opt.sizes = doc["sizes"].get<std::vector<int>>();
    if (unset("samples")) opt.samples = doc["samples"].get<int>();
    if (unset("steps")) opt.steps = doc["steps"].get<std::uint64_t>();
    if (unset("burnin")) opt.burnin = doc["burnin"].get<std::uint64_t>();
    if (unset("gap")) opt.gap = doc["gap"].get<std::uint64_t>();
    if (unset("seed")) opt.seed = doc["seed"].get<std::uint64_t>();
    if (unset("r")) opt.r = doc["r"].get<int>();
    if (unset("tmax")) opt.tmax = doc["tmax"].get<int>();
    if (unset("out")) opt.out = doc["out"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw glab::ValidationError("config " + opt.config + ": " + e.what());
  }
}

std::vector<int> sizes_of(const Options& opt) {
  if (!opt.sizes.empty()) return opt.sizes;
  if (opt.n) return {*opt.n};
  throw glab::ValidationError("give --n or --sizes");
}

glab::ForbiddenFamily load_family(const Options& opt) {
  if (opt.family.empty()) throw glab::ValidationError("--family is required");
  return glab::ForbiddenFamily::from_file(opt.family);
}

glab::ExperimentConfig experiment_config(const Options& opt, bool need_family) {
  glab::ExperimentConfig c;
  if (need_family) {
    c.family = load_family(opt);
    c.family_label = opt.family;
  }
  c.sizes = sizes_of(opt);
  c.samples = opt.samples;
  c.steps = opt.steps;
  c.burnin = opt.burnin;
  c.gap = opt.gap;
  c.seed = opt.seed;
  c.r_override = opt.r;
  c.compare_partite = opt.partite;
  return c;
}

glab::StepGraphon graphon_arg(const Options& opt, std::size_t index) {
  if (opt.graphons.size() <= index) throw glab::ValidationError("missing --graphon argument");
  return glab::read_graphon_file(opt.graphons[index]);
}

void cmd_entropy(const Options& opt) {
  std::ostringstream os;
  if (!opt.graphons.empty()) {
    os << glab::format_real(glab::entropy(graphon_arg(opt, 0))) << "\n";
  } else if (opt.r) {
    os << glab::format_real(glab::entropy(glab::make_wrs(*opt.r, opt.s.value_or(0)))) << "\n";
  } else {
    throw glab::ValidationError("entropy: give --graphon or --r [--s]");
  }
  emit(opt, os.str());
}

void cmd_cutdist(const Options& opt) {
  const auto a = graphon_arg(opt, 0);
  const auto b = graphon_arg(opt, 1);
  glab::CutDistanceMode mode;
  if (opt.mode == "exact") mode = glab::CutDistanceMode::kExactPermutation;
  else if (opt.mode == "local") mode = glab::CutDistanceMode::kLocalSearch;
  else throw glab::ValidationError("cutdist: --mode must be exact or local");
  const double d = glab::cut_distance(a, b, mode, glab::SampleSeed{opt.seed, 0});
  emit(opt, glab::format_real(d) + "\n");
}

void cmd_count(const Options& opt) {
  const auto family = load_family(opt);
  auto sizes = sizes_of(opt);
  std::sort(sizes.begin(), sizes.end());
  const auto levels = glab::unlabeled_census(family, sizes.back());
  glab::ExperimentReport report;
  report.columns = {"n", "labeled_count", "unlabeled_count", "speed_exponent"};
  for (int n : sizes) {
    const auto labeled = glab::labeled_from_census(levels[n], n);
    report.rows.push_back({std::to_string(n), labeled.str(), std::to_string(levels[n].size()),
                           n >= 2 ? glab::format_real(glab::speed_exponent_of(labeled, n)) : ""});
  }
  emit(opt, report.to_csv());
}

void cmd_sample(const Options& opt) {
  if (!opt.n) throw glab::ValidationError("sample: --n is required");
  std::ostringstream os;
  const glab::SampleSeed base{opt.seed, 0};
  if (!opt.graphons.empty()) {
    const auto w = graphon_arg(opt, 0);
    for (int j = 0; j < opt.samples; ++j)
      os << glab::to_graph6(glab::sample_wrandom(w, *opt.n, base.child(static_cast<std::uint64_t>(j)))) << "\n";
  } else {
    const auto family = load_family(opt);
    for (int j = 0; j < opt.samples; ++j) {
      const auto s = base.child(static_cast<std::uint64_t>(j));
      const auto g = opt.steps ? glab::mcmc_sample(family, *opt.n, *opt.steps, s)
                               : glab::exact_uniform_sample(family, *opt.n, s);
      os << glab::to_graph6(g) << "\n";
    }
  }
  emit(opt, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphlab: graphons, cut distance and F-free graph classes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "forbidden family file (graph6 lines, '#' comments)");
    sub->add_option("--graphon", opt.graphons, "graphon JSON file (repeat for two)");
    sub->add_option("--n", opt.n, "number of vertices");
    sub->add_option("--sizes", opt.sizes, "list of n")->delimiter(',');
    sub->add_option("--samples", opt.samples, "samples per size");
    sub->add_option("--steps", opt.steps, "MCMC steps (fixed chain length)");
    sub->add_option("--burnin", opt.burnin, "MCMC burn-in steps");
    sub->add_option("--gap", opt.gap, "MCMC steps between recorded states");
    sub->add_option("--seed", opt.seed, "64-bit seed");
    sub->add_option("--r", opt.r, "r (override, or block count for entropy)");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--config", opt.config, "JSON file with any of the options above");
  };

  auto* entropy = app.add_subcommand("entropy", "entropy of a graphon, or of W*_{r,s}");
  add_common(entropy);
  entropy->add_option("--s", opt.s, "number of clique blocks for W*_{r,s}");
  auto* cutdist = app.add_subcommand("cutdist", "cut distance upper bound between two graphons");
  add_common(cutdist);
  cutdist->add_option("--mode", opt.mode, "exact | local");
  auto* count = app.add_subcommand("count", "labeled/unlabeled census of Forb(F)");
  add_common(count);
  auto* sample = app.add_subcommand("sample", "W-random graphs, or uniform F-free graphs, as graph6");
  add_common(sample);
  auto* converge = app.add_subcommand("converge", "distance of uniform F-free graphs to W*_{r,0}");
  add_common(converge);
  auto* speed = app.add_subcommand("speed", "speed exponents of Forb(F)");
  add_common(speed);
  speed->add_flag("--partite", opt.partite, "also count C(r,0) with r = col(F) - 1");
  auto* audit = app.add_subcommand("audit", "entropy audit of R_t graphons");
  add_common(audit);
  audit->add_option("--tmax", opt.tmax, "largest t");
  auto* couple = app.add_subcommand("couple", "monotone coupling demo for two ordered graphons");
  add_common(couple);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    apply_config(app, opt);
    if (entropy->parsed()) cmd_entropy(opt);
    else if (cutdist->parsed()) cmd_cutdist(opt);
    else if (count->parsed()) cmd_count(opt);
    else if (sample->parsed()) cmd_sample(opt);
    else if (converge->parsed()) emit(opt, glab::run_convergence(experiment_config(opt, true)).to_csv());
    else if (speed->parsed()) emit(opt, glab::run_speed(experiment_config(opt, true)).to_csv());
    else if (audit->parsed()) {
      const auto report = glab::run_entropy_audit(opt.tmax);
      emit(opt, report.to_csv());
      if (report.violations > 0) return 1;
    } else if (couple->parsed()) {
      auto config = experiment_config(opt, false);
      emit(opt, glab::run_coupling_demo(config, graphon_arg(opt, 0), graphon_arg(opt, 1)).to_csv());
    }
  } catch (const glab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const glab::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
  return 0;
}
