// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "graphlab/canonical.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/graph6.hpp"
#include "graphlab/rng.hpp"

using namespace glab;

namespace {

std::string key(const SimpleGraph& g) { return to_graph6(canonical_form(g).graph); }

// Oracle: count permutations preserving the edge set.
std::uint64_t brute_force_automorphisms(const SimpleGraph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    count += g.relabeled(p) == g ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

SimpleGraph graph_from_mask(int n, std::uint32_t mask) {
  SimpleGraph g(n);
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if ((mask >> t) & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST(Canonical, RelabelingsOfP4) {
  const auto p4 = path_graph(4);
  const auto expected = key(p4);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    EXPECT_EQ(key(p4.relabeled(perm)), expected);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_NE(key(complete_graph(3)), key(path_graph(3)));
  EXPECT_NE(key(cycle_graph(6)), key(SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Canonical, AutomorphismCounts) {
  EXPECT_EQ(brute_force_automorphisms(cycle_graph(5)), 10u);
  EXPECT_EQ(canonical_form(cycle_graph(5)).automorphisms, 10u);
  EXPECT_EQ(canonical_form(petersen_graph()).automorphisms, 120u);
  EXPECT_EQ(canonical_form(SimpleGraph(12)).automorphisms, 479001600u);
  EXPECT_EQ(canonical_form(complete_graph(12)).automorphisms, 479001600u);
  EXPECT_EQ(canonical_form(SimpleGraph(0)).automorphisms, 1u);
  // K_{3,3} plus an isolated vertex
  SimpleGraph k33(7);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  EXPECT_EQ(canonical_form(k33).automorphisms, 72u);
  EXPECT_THROW(canonical_form(SimpleGraph(13)), BudgetError);
}

TEST(Canonical, AutomorphismsMatchBruteForce) {
  CounterStream rng(SampleSeed{31, 0});
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(7));
    const double p = rng.next_unit();
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next_unit() < p) g.add_edge(i, j);
    EXPECT_EQ(canonical_form(g).automorphisms, brute_force_automorphisms(g)) << to_graph6(g);
  }
}

TEST(Canonical, InvariantUnderAllPermutationsUpToFiveVertices) {
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const auto g = graph_from_mask(n, mask);
      const auto expected = key(g);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        ASSERT_EQ(key(g.relabeled(perm)), expected);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(Canonical, OrbitStabilizerCensus) {
  const std::vector<std::size_t> classes{1, 1, 2, 4, 11, 34};  // unlabeled graphs on n vertices
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, std::uint64_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const auto cf = canonical_form(graph_from_mask(n, mask));
      seen.emplace(to_graph6(cf.graph), cf.automorphisms);
    }
    EXPECT_EQ(seen.size(), classes[n]);
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    std::uint64_t labeled = 0;
    for (const auto& [k, aut] : seen) labeled += factorial / aut;
    EXPECT_EQ(labeled, std::uint64_t{1} << pairs);
  }
}

TEST(Canonical, LabelingReproducesGraph) {
  const auto g = petersen_graph();
  const auto cf = canonical_form(g);
  std::vector<int> position(10);
  for (int p = 0; p < 10; ++p) position[cf.labeling[p]] = p;
  EXPECT_EQ(g.relabeled(position), cf.graph);
}
