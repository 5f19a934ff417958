// SPDX-License-Identifier: Apache-2.0
//
// Exact counting, enumeration and uniform sampling for Forb(F).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphlab/canonical.hpp"
#include "graphlab/errors.hpp"
#include "graphlab/family.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/graph6.hpp"
#include "graphlab/rng.hpp"

namespace glab {

using BigInt = boost::multiprecision::cpp_int;
using GraphPredicate = std::function<bool(const SimpleGraph&)>;

struct CountBudget {
  int direct_max_order = 6;         // 2^15 labeled graphs
  int census_max_order = 10;
  std::size_t census_max_nodes = 20'000'000;  // canonical forms computed
};

struct CountResult {
  int n = 0;
  BigInt labeled_count;
  BigInt unlabeled_count;
  double speed_exponent = 0.0;  // log2(labeled_count) / C(n,2); 0 for n < 2
};

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline double log2_big(const BigInt& x) {
  if (x <= 0) throw ValidationError("log2 of a nonpositive count");
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 53) return std::log2(x.convert_to<double>());
  const BigInt top = x >> (msb - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(msb - 52);
}

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// Calls visit(g) for every labeled graph on [n] in Forb(family); n <= direct bound.
template <typename Visit>
void for_each_labeled_member(const ForbiddenFamily& family, int n, Visit&& visit,
                             const CountBudget& budget = {}) {
  if (n < 0) throw ValidationError("negative vertex count");
  if (n > budget.direct_max_order) {
    throw BudgetError("direct enumeration: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.direct_max_order));
  }
  const auto pairs = vertex_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SimpleGraph g(n);
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((mask >> t) & 1u) g.add_edge(pairs[t].first, pairs[t].second);
    if (family.admits(g)) visit(g);
  }
}

struct CensusEntry {
  SimpleGraph graph;  // canonical representative
  std::uint64_t automorphisms = 1;
};

// Isomorphism classes of Forb(family) on 0..max_order vertices, level by level.
// Every member on m vertices minus its last vertex is a member on m - 1
// vertices, so extending each class representative by a new vertex with every
// admissible neighborhood reaches every class; duplicates are removed by
// canonical form.
inline std::vector<std::vector<CensusEntry>> unlabeled_census(const ForbiddenFamily& family, int max_order,
                                                              const CountBudget& budget = {}) {
  if (max_order > budget.census_max_order) {
    throw BudgetError("census: n = " + std::to_string(max_order) + " exceeds budget " +
                      std::to_string(budget.census_max_order));
  }
  std::vector<std::vector<CensusEntry>> levels;
  levels.push_back({CensusEntry{SimpleGraph(0), 1}});
  if (!family.admits(SimpleGraph(0))) levels.back().clear();
  std::size_t nodes = 0;
  for (int m = 1; m <= max_order; ++m) {
    std::map<std::string, CensusEntry> found;
    for (const auto& parent : levels.back()) {
      const int old = m - 1;
      SimpleGraph base(m);
      for (const auto& [a, b] : parent.graph.edges()) base.add_edge(a, b);
      // An isolated new vertex can already complete a member with isolated vertices.
      if (!family.admits(base)) continue;
      for (std::uint32_t subset = 0; subset < (1u << old); ++subset) {
        SimpleGraph g = base;
        bool ok = true;
        for (int v = 0; ok && v < old; ++v) {
          if (!((subset >> v) & 1u)) continue;
          g.add_edge(v, old);
          ok = family.admits_with_new_edge(g, v, old);
        }
        if (!ok) continue;
        if (++nodes > budget.census_max_nodes) {
          throw BudgetError("census: node budget of " + std::to_string(budget.census_max_nodes) + " exhausted");
        }
        auto cf = canonical_form(g);
        auto key = to_graph6(cf.graph);
        found.try_emplace(std::move(key), CensusEntry{std::move(cf.graph), cf.automorphisms});
      }
    }
    std::vector<CensusEntry> level;
    level.reserve(found.size());
    for (auto& [key, entry] : found) level.push_back(std::move(entry));
    levels.push_back(std::move(level));
  }
  return levels;
}

// sum over classes of n!/|Aut|, optionally restricted by an isomorphism-invariant predicate.
inline BigInt labeled_from_census(const std::vector<CensusEntry>& level, int n, const GraphPredicate& predicate = {}) {
  const BigInt nf = factorial(n);
  BigInt total = 0;
  for (const auto& e : level)
    if (!predicate || predicate(e.graph)) total += nf / e.automorphisms;
  return total;
}

inline BigInt count_labeled_direct(const ForbiddenFamily& family, int n, const GraphPredicate& predicate = {},
                                   const CountBudget& budget = {}) {
  BigInt count = 0;
  for_each_labeled_member(
      family, n, [&](const SimpleGraph& g) { count += (!predicate || predicate(g)) ? 1 : 0; }, budget);
  return count;
}

// |Forb(family)^L_n|, intersected with `predicate` when given. The predicate
// must be invariant under relabeling when the census path (n above the direct
// bound) is taken.
inline BigInt count_labeled(const ForbiddenFamily& family, int n, const GraphPredicate& predicate = {},
                            const CountBudget& budget = {}) {
  if (n <= budget.direct_max_order) return count_labeled_direct(family, n, predicate, budget);
  return labeled_from_census(unlabeled_census(family, n, budget).back(), n, predicate);
}

inline BigInt count_unlabeled(const ForbiddenFamily& family, int n, const CountBudget& budget = {}) {
  return BigInt(unlabeled_census(family, n, budget).back().size());
}

inline double speed_exponent_of(const BigInt& labeled, int n) {
  if (n < 2) throw ValidationError("speed exponent needs n >= 2");
  return log2_big(labeled) / (static_cast<double>(n) * (n - 1) / 2.0);
}

inline double speed_exponent(const ForbiddenFamily& family, int n, const CountBudget& budget = {}) {
  return speed_exponent_of(count_labeled(family, n, {}, budget), n);
}

// Counts for n = 0..max_order from one census.
inline std::vector<CountResult> count_range(const ForbiddenFamily& family, int max_order,
                                            const CountBudget& budget = {}) {
  const auto levels = unlabeled_census(family, max_order, budget);
  std::vector<CountResult> out;
  for (int n = 0; n <= max_order; ++n) {
    CountResult r;
    r.n = n;
    r.unlabeled_count = levels[n].size();
    r.labeled_count = labeled_from_census(levels[n], n);
    r.speed_exponent = n >= 2 ? speed_exponent_of(r.labeled_count, n) : 0.0;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string family_key(const ForbiddenFamily& family) {
  std::vector<std::string> keys;
  for (const auto& m : family.members()) keys.push_back(to_graph6(canonical_form(m).graph));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + ";";
  return out;
}

// Uniform element of Forb(family)^L_n (n <= direct bound). The enumerated class
// is cached per (family, n) for the life of the process.
inline SimpleGraph exact_uniform_sample(const ForbiddenFamily& family, int n, SampleSeed seed,
                                        const CountBudget& budget = {}) {
  using Members = std::vector<SimpleGraph>;
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const Members>> cache;
  const std::string key = family_key(family) + std::to_string(n);
  std::shared_ptr<const Members> members;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) members = it->second;
  }
  if (!members) {
    auto fresh = std::make_shared<Members>();
    for_each_labeled_member(family, n, [&](const SimpleGraph& g) { fresh->push_back(g); }, budget);
    std::lock_guard lock(mutex);
    members = cache.try_emplace(key, std::move(fresh)).first->second;
  }
  if (members->empty()) throw ValidationError("exact_uniform_sample: class is empty");
  CounterStream rng(seed);
  return (*members)[rng.next_below(members->size())];
}

// Lazy edge-toggle Metropolis chain on Forb(family)^L_n, started at the
// edgeless graph. Each step: with probability 1/2 stay; otherwise toggle a
// uniformly random vertex pair and keep the result iff it is family-free.
// Deletions never leave a monotone class, so only additions are checked.
class EdgeToggleChain {
 public:
  EdgeToggleChain(const ForbiddenFamily& family, int n, SampleSeed seed)
      : family_(&family), graph_(n), pairs_(vertex_pairs(n)), rng_(seed) {
    if (!family.admits(graph_)) throw ValidationError("mcmc: the edgeless graph is not in the class");
  }

  void step() {
    if ((rng_.next_u64() >> 63) == 0 || pairs_.empty()) return;
    const auto [a, b] = pairs_[rng_.next_below(pairs_.size())];
    const bool present = graph_.has_edge(a, b);
    graph_.toggle_edge_unchecked(a, b);
    if (!present && !family_->admits_with_new_edge(graph_, a, b)) graph_.toggle_edge_unchecked(a, b);
  }

  void run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
  }

  [[nodiscard]] const SimpleGraph& state() const noexcept { return graph_; }

 private:
  const ForbiddenFamily* family_;
  SimpleGraph graph_;
  std::vector<std::pair<int, int>> pairs_;
  CounterStream rng_;
};

inline SimpleGraph mcmc_sample(const ForbiddenFamily& family, int n, std::uint64_t steps, SampleSeed seed) {
  EdgeToggleChain chain(family, n, seed);
  chain.run(steps);
  return chain.state();
}

}  // namespace glab
