// SPDX-License-Identifier: Apache-2.0
//
// Cut norm ||K|| = sup_{S,T} |int_{S x T} K| (no 1/|S||T| factor) and the
// cut distance between step graphons under block realignments.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "graphlab/errors.hpp"
#include "graphlab/graphon.hpp"
#include "graphlab/rng.hpp"

namespace glab {

inline constexpr int kCutNormExactThreshold = 20;

namespace detail {

// a[i*k + j] = m_i m_j K_ij, the mass of cell (i,j).
inline std::vector<double> cell_masses(const StepKernel& kernel) {
  const int k = kernel.blocks();
  std::vector<double> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      a[static_cast<std::size_t>(i) * k + j] = kernel.measure(i) * kernel.measure(j) * kernel.value(i, j);
  return a;
}

// Best |sum_{j in T} c_j| over T: either all positive entries or all negative ones.
inline double best_column_choice(std::span<const double> c) {
  double pos = 0.0;
  double neg = 0.0;
  for (double x : c) {
    if (x > 0) pos += x;
    else neg -= x;
  }
  return std::max(pos, neg);
}

}  // namespace detail

// Exact cut norm of a step kernel with at most `exact_threshold` blocks.
//
// For fixed S the integral is linear in the fractional membership of each
// block in T, and vice versa, so the supremum is attained with S and T unions
// of whole blocks. We enumerate S over all 2^k block subsets (Gray code order)
// and pick T per block by the sign of its column sum.
inline double cut_norm(const StepKernel& kernel, int exact_threshold = kCutNormExactThreshold) {
  const int k = kernel.blocks();
  if (k > exact_threshold || k > 30) {
    throw BudgetError("cut_norm: " + std::to_string(k) + " blocks exceeds exact threshold " +
                      std::to_string(exact_threshold) + "; use cut_norm_estimate");
  }
  const auto a = detail::cell_masses(kernel);
  std::vector<double> col(static_cast<std::size_t>(k), 0.0);
  std::uint32_t subset = 0;
  double best = 0.0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int flip = std::countr_zero(step);
    subset ^= std::uint32_t{1} << flip;
    if ((step & 1023u) == 0) {
      // recompute from scratch to stop rounding drift
      std::fill(col.begin(), col.end(), 0.0);
      for (int i = 0; i < k; ++i)
        if ((subset >> i) & 1u)
          for (int j = 0; j < k; ++j) col[j] += a[static_cast<std::size_t>(i) * k + j];
    } else {
      const double sign = ((subset >> flip) & 1u) ? 1.0 : -1.0;
      const double* row = a.data() + static_cast<std::size_t>(flip) * k;
      for (int j = 0; j < k; ++j) col[j] += sign * row[j];
    }
    best = std::max(best, detail::best_column_choice(col));
  }
  return best;
}

// Lower bound on the cut norm by alternating best responses between S and T
// (each step flips every block whose flip improves the objective), for both
// signs of the integral, best over `restarts` starts. Even-numbered restarts
// start from a single column block, odd ones from a random T.
inline double cut_norm_estimate(const StepKernel& kernel, int restarts, SampleSeed seed) {
  const int k = kernel.blocks();
  const auto a = detail::cell_masses(kernel);
  CounterStream rng(seed);
  std::vector<char> in_s(k);
  std::vector<char> in_t(k);
  double best = 0.0;

  auto value_of = [&](double sign) {
    double v = 0.0;
    for (int i = 0; i < k; ++i)
      if (in_s[i])
        for (int j = 0; j < k; ++j)
          if (in_t[j]) v += a[static_cast<std::size_t>(i) * k + j];
    return sign * v;
  };

  for (int r = 0; r < std::max(restarts, 1); ++r) {
    std::vector<char> start_t(k, 0);
    if (r % 2 == 0) {
      start_t[(r / 2) % k] = 1;
    } else {
      for (int j = 0; j < k; ++j) start_t[j] = static_cast<char>(rng.next_u64() >> 63);
    }
    for (double sign : {1.0, -1.0}) {
      in_t = start_t;
      double current = -1.0;
      for (int iter = 0; iter < 4 * k + 8; ++iter) {
        for (int i = 0; i < k; ++i) {
          double s = 0.0;
          for (int j = 0; j < k; ++j)
            if (in_t[j]) s += a[static_cast<std::size_t>(i) * k + j];
          in_s[i] = sign * s > 0;
        }
        for (int j = 0; j < k; ++j) {
          double s = 0.0;
          for (int i = 0; i < k; ++i)
            if (in_s[i]) s += a[static_cast<std::size_t>(i) * k + j];
          in_t[j] = sign * s > 0;
        }
        const double v = value_of(sign);
        if (v <= current) break;
        current = v;
      }
      best = std::max(best, current);
    }
  }
  return best;
}

enum class CutDistanceMode { kExactPermutation, kLocalSearch };

// Upper bound on the cut distance: minimum over block realignments of W2 of
// the cut norm of W1 - W2.
//
// kExactPermutation: both graphons must have equal-measure blocks; both are
// refined to a common grid of lcm(k1, k2) <= 8 equal blocks and every
// permutation of the second graphon's grid blocks is tried.
//
// kLocalSearch: any block structures; permutations of W2's blocks are improved
// by first-improvement transpositions from the identity and from a
// degree-sorted alignment. Cut norms are exact up to the exact threshold and
// hill-climbed beyond it (the result is then an estimate, not a bound).
inline double cut_distance(const StepGraphon& w1, const StepGraphon& w2, CutDistanceMode mode,
                           SampleSeed seed = {}) {
  if (mode == CutDistanceMode::kExactPermutation) {
    const auto k1 = w1.equal_block_count();
    const auto k2 = w2.equal_block_count();
    if (!k1 || !k2) throw ValidationError("cut_distance: exact mode needs equal-measure blocks");
    const int grid = std::lcm(*k1, *k2);
    if (grid > 8) {
      throw ValidationError("cut_distance: common grid of " + std::to_string(grid) +
                            " blocks exceeds the exact-permutation limit of 8");
    }
    const auto a = refine_equal(w1, grid);
    const auto b = refine_equal(w2, grid);
    std::vector<int> order(static_cast<std::size_t>(grid));
    std::iota(order.begin(), order.end(), 0);
    double best = cut_norm(difference(a, b));
    while (best > 0.0 && std::next_permutation(order.begin(), order.end())) {
      best = std::min(best, cut_norm(difference(a, permute_blocks(b, order))));
    }
    return best;
  }

  auto norm = [&](const std::vector<int>& order) {
    const auto kernel = difference(w1, permute_blocks(w2, order));
    if (kernel.blocks() <= kCutNormExactThreshold) return cut_norm(kernel);
    return cut_norm_estimate(kernel, 8, seed);
  };
  const int k = w2.blocks();
  std::vector<int> identity(static_cast<std::size_t>(k));
  std::iota(identity.begin(), identity.end(), 0);

  // Degree-sorted start: W2 blocks ordered by degree, matched to W1's degree order.
  auto degrees = [](const StepGraphon& w) {
    std::vector<double> d(static_cast<std::size_t>(w.blocks()), 0.0);
    for (int i = 0; i < w.blocks(); ++i)
      for (int j = 0; j < w.blocks(); ++j) d[i] += w.measure(j) * w.value(i, j);
    return d;
  };
  std::vector<int> sorted = identity;
  {
    const auto d2 = degrees(w2);
    std::stable_sort(sorted.begin(), sorted.end(), [&](int x, int y) { return d2[x] < d2[y]; });
    if (w1.blocks() == k) {
      const auto d1 = degrees(w1);
      std::vector<int> rank1(identity);
      std::stable_sort(rank1.begin(), rank1.end(), [&](int x, int y) { return d1[x] < d1[y]; });
      std::vector<int> matched(static_cast<std::size_t>(k));
      for (int p = 0; p < k; ++p) matched[rank1[p]] = sorted[p];
      sorted = matched;
    }
  }

  double best = norm(identity);
  for (auto order : {identity, sorted}) {
    double current = norm(order);
    bool improved = true;
    while (improved && current > 0.0) {
      improved = false;
      for (int p = 0; p < k && !improved; ++p) {
        for (int q = p + 1; q < k && !improved; ++q) {
          std::swap(order[p], order[q]);
          const double v = norm(order);
          if (v < current) {
            current = v;
            improved = true;
          } else {
            std::swap(order[p], order[q]);
          }
        }
      }
    }
    best = std::min(best, current);
  }
  return best;
}

}  // namespace glab
