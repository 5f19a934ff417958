// SPDX-License-Identifier: Apache-2.0
//
// W-random graphs G(n, W). Stream layout for a SampleSeed: words 0..n-1 are the
// latent positions X_1..X_n; word n + t is the edge uniform U_ij of the t-th
// pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1). Edge ij is present
// iff U_ij < W(X_i, X_j). Coupled samples share every word.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "graphlab/errors.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/graphon.hpp"
#include "graphlab/rng.hpp"

namespace glab {

// Block index of each of the n latent positions.
inline std::vector<int> sample_latent_blocks(const StepGraphon& w, int n, SampleSeed seed) {
  const auto bounds = w.cumulative_bounds();
  CounterStream rng(seed);
  std::vector<int> blocks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = rng.next_unit();
    const auto it = std::upper_bound(bounds.begin(), bounds.end(), x);
    blocks[i] = std::min(static_cast<int>(it - bounds.begin()), w.blocks() - 1);
  }
  return blocks;
}

inline SimpleGraph sample_wrandom(const StepGraphon& w, int n, SampleSeed seed) {
  if (n < 1) throw ValidationError("sample_wrandom: n must be positive");
  const auto blocks = sample_latent_blocks(w, n, seed);
  CounterStream rng(seed);
  rng.seek(static_cast<std::uint64_t>(n));
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < w.value(blocks[i], blocks[j])) g.add_edge(i, j);
  return g;
}

// Monotone coupling of G(n, low) and G(n, high) for low <= high pointwise:
// shared latent positions and edge uniforms, so first is a subgraph of second.
inline std::pair<SimpleGraph, SimpleGraph> sample_coupled(const StepGraphon& low, const StepGraphon& high, int n,
                                                          SampleSeed seed) {
  if (n < 1) throw ValidationError("sample_coupled: n must be positive");
  if (!pointwise_leq(low, high)) throw ValidationError("sample_coupled: first graphon is not <= second pointwise");
  // Evaluate both graphons on one common partition so a single latent draw serves both.
  const auto ref = common_refinement(low.measures(), high.measures());
  const StepGraphon a = pull_back(low, ref, true);
  const StepGraphon b = pull_back(high, ref, false);
  const auto blocks = sample_latent_blocks(a, n, seed);
  CounterStream rng(seed);
  rng.seek(static_cast<std::uint64_t>(n));
  SimpleGraph g_low(n);
  SimpleGraph g_high(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = rng.next_unit();
      if (u < a.value(blocks[i], blocks[j])) g_low.add_edge(i, j);
      if (u < b.value(blocks[i], blocks[j])) g_high.add_edge(i, j);
    }
  }
  return {std::move(g_low), std::move(g_high)};
}

}  // namespace glab
