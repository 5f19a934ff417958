// SPDX-License-Identifier: Apache-2.0
//
// Step graphons: symmetric functions on [0,1]^2 that are constant on the cells
// I_a x I_b of a finite partition of [0,1] into intervals. Interval lengths are
// exact rationals so that two partitions always have an exact common
// refinement (or the operation refuses on 64-bit overflow).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphlab/errors.hpp"
#include "graphlab/extended.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/rational.hpp"

namespace glab {

enum class ValueRange { kUnit, kSigned };

template <ValueRange Range>
class StepFunction {
 public:
  static constexpr double kMinValue = Range == ValueRange::kUnit ? 0.0 : -1.0;
  static constexpr double kMaxValue = 1.0;

  // values is row-major k x k.
  StepFunction(std::vector<Rational> measures, std::vector<double> values)
      : measures_(std::move(measures)), values_(std::move(values)) {
    validate();
  }

  StepFunction(std::vector<Rational> measures, const std::vector<std::vector<double>>& rows)
      : measures_(std::move(measures)) {
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw ValidationError("step function: values matrix is not square");
      values_.insert(values_.end(), row.begin(), row.end());
    }
    validate();
  }

  [[nodiscard]] int blocks() const noexcept { return static_cast<int>(measures_.size()); }
  [[nodiscard]] const std::vector<Rational>& measures() const noexcept { return measures_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] double value(int a, int b) const noexcept {
    return values_[static_cast<std::size_t>(a) * measures_.size() + static_cast<std::size_t>(b)];
  }
  [[nodiscard]] double measure(int a) const noexcept { return measures_[a].to_double(); }

  // Cumulative right endpoints of the blocks, as doubles.
  [[nodiscard]] std::vector<double> cumulative_bounds() const {
    std::vector<double> out;
    Rational acc(0);
    for (const auto& m : measures_) {
      acc = acc + m;
      out.push_back(acc.to_double());
    }
    return out;
  }

  // Number k if every block has measure exactly 1/k.
  [[nodiscard]] std::optional<int> equal_block_count() const {
    const Rational expect(1, blocks());
    for (const auto& m : measures_)
      if (m != expect) return std::nullopt;
    return blocks();
  }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  void validate() const {
    const std::size_t k = measures_.size();
    if (k == 0) throw ValidationError("step function: no blocks");
    if (values_.size() != k * k) throw ValidationError("step function: values must be k x k");
    Rational total(0);
    for (const auto& m : measures_) {
      if (m <= Rational(0)) throw ValidationError("step function: block measure must be positive");
      total = total + m;
    }
    if (total != Rational(1)) {
      throw ValidationError("step function: block measures sum to " + total.to_string() + ", not 1");
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const double v = values_[i * k + j];
        if (!std::isfinite(v) || v < kMinValue || v > kMaxValue) {
          throw ValidationError("step function: value out of range at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        }
        if (v != values_[j * k + i]) {
          throw ValidationError("step function: values not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        }
      }
    }
  }

  std::vector<Rational> measures_;
  std::vector<double> values_;
};

using StepGraphon = StepFunction<ValueRange::kUnit>;
using StepKernel = StepFunction<ValueRange::kSigned>;

inline std::vector<Rational> equal_measures(int k) {
  return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k));
}

inline StepGraphon constant_graphon(double p) { return StepGraphon({Rational(1)}, std::vector<double>{p}); }

// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("binary_entropy: argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Graphon in R_t: value 1/2 off the diagonal blocks, diagonal[i] in {0,1} on I_i x I_i.
inline StepGraphon make_r_form(std::span<const int> diagonal) {
  const int t = static_cast<int>(diagonal.size());
  if (t == 0) throw ValidationError("make_r_form: need at least one block");
  std::vector<double> values(static_cast<std::size_t>(t) * t, 0.5);
  for (int i = 0; i < t; ++i) {
    if (diagonal[i] != 0 && diagonal[i] != 1) throw ValidationError("make_r_form: diagonal entries must be 0 or 1");
    values[static_cast<std::size_t>(i) * t + i] = diagonal[i];
  }
  return StepGraphon(equal_measures(t), std::move(values));
}

// W*_{r,s}: r equal blocks, 1/2 across blocks, 1 on the first s diagonal
// blocks and 0 on the rest. r = infinity gives the constant-1/2 graphon.
inline StepGraphon make_wrs(ExtendedNat r, int s) {
  if (r.is_infinite()) {
    if (s != 0) throw ValidationError("make_wrs: s must be 0 when r is infinite");
    return constant_graphon(0.5);
  }
  if (r.value() < 1) throw ValidationError("make_wrs: r must be positive");
  if (s < 0 || s > r.value()) throw ValidationError("make_wrs: need 0 <= s <= r");
  std::vector<int> diagonal(static_cast<std::size_t>(r.value()), 0);
  std::fill_n(diagonal.begin(), s, 1);
  return make_r_form(diagonal);
}

// Integral of h(W) over the unit square; exact for step functions up to rounding.
inline double entropy(const StepGraphon& w) {
  const int k = w.blocks();
  double total = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) total += w.measure(i) * w.measure(j) * binary_entropy(w.value(i, j));
  return total;
}

// n equal blocks; value 1 on I_i x I_j iff ij is an edge.
inline StepGraphon empirical_graphon(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 1) throw ValidationError("empirical_graphon: graph has no vertices");
  std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& [a, b] : g.edges()) {
    values[static_cast<std::size_t>(a) * n + b] = 1.0;
    values[static_cast<std::size_t>(b) * n + a] = 1.0;
  }
  return StepGraphon(equal_measures(n), std::move(values));
}

// Common refinement of two interval partitions of [0,1]. Cell c lies inside
// block first_block[c] of the first partition and second_block[c] of the second.
struct Refinement {
  std::vector<Rational> measures;
  std::vector<int> first_block;
  std::vector<int> second_block;
};

inline Refinement common_refinement(std::span<const Rational> first, std::span<const Rational> second) {
  Refinement out;
  std::size_t a = 0;
  std::size_t b = 0;
  Rational end_a = first[0];
  Rational end_b = second[0];
  Rational start(0);
  while (a < first.size() && b < second.size()) {
    const Rational cut = std::min(end_a, end_b);
    out.measures.push_back(cut - start);
    out.first_block.push_back(static_cast<int>(a));
    out.second_block.push_back(static_cast<int>(b));
    start = cut;
    if (end_a == cut && ++a < first.size()) end_a = end_a + first[a];
    if (end_b == cut && ++b < second.size()) end_b = end_b + second[b];
  }
  return out;
}

template <ValueRange Range>
StepFunction<Range> pull_back(const StepFunction<Range>& w, const Refinement& ref, bool first) {
  const auto& map = first ? ref.first_block : ref.second_block;
  const std::size_t c = map.size();
  std::vector<double> values(c * c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) values[i * c + j] = w.value(map[i], map[j]);
  return StepFunction<Range>(ref.measures, std::move(values));
}

// W1 - W2 on the common refinement of their block structures.
inline StepKernel difference(const StepGraphon& w1, const StepGraphon& w2) {
  const auto ref = common_refinement(w1.measures(), w2.measures());
  const std::size_t c = ref.measures.size();
  std::vector<double> values(c * c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      values[i * c + j] = w1.value(ref.first_block[i], ref.first_block[j]) -
                          w2.value(ref.second_block[i], ref.second_block[j]);
  return StepKernel(ref.measures, std::move(values));
}

// True iff W1 <= W2 everywhere (checked on the common refinement).
inline bool pointwise_leq(const StepGraphon& w1, const StepGraphon& w2) {
  const auto ref = common_refinement(w1.measures(), w2.measures());
  const std::size_t c = ref.measures.size();
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (w1.value(ref.first_block[i], ref.first_block[j]) > w2.value(ref.second_block[i], ref.second_block[j]))
        return false;
  return true;
}

// min{W, 1/2}, same block structure.
inline StepGraphon cap_at_half(const StepGraphon& w) {
  auto values = w.values();
  for (auto& v : values) v = std::min(v, 0.5);
  return StepGraphon(w.measures(), std::move(values));
}

// Relabel blocks: block p of the result is block order[p] of w.
template <ValueRange Range>
StepFunction<Range> permute_blocks(const StepFunction<Range>& w, std::span<const int> order) {
  const int k = w.blocks();
  if (static_cast<int>(order.size()) != k) throw ValidationError("permute_blocks: size mismatch");
  std::vector<Rational> measures;
  std::vector<double> values(static_cast<std::size_t>(k) * k);
  for (int p = 0; p < k; ++p) {
    measures.push_back(w.measures()[order[p]]);
    for (int q = 0; q < k; ++q) values[static_cast<std::size_t>(p) * k + q] = w.value(order[p], order[q]);
  }
  return StepFunction<Range>(std::move(measures), std::move(values));
}

// Split every block of an equal-block graphon into `total / k` equal pieces.
template <ValueRange Range>
StepFunction<Range> refine_equal(const StepFunction<Range>& w, int total) {
  const auto k = w.equal_block_count();
  if (!k || total % *k != 0) throw ValidationError("refine_equal: incompatible block counts");
  const int factor = total / *k;
  std::vector<double> values(static_cast<std::size_t>(total) * total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) values[static_cast<std::size_t>(i) * total + j] = w.value(i / factor, j / factor);
  return StepFunction<Range>(equal_measures(total), std::move(values));
}

}  // namespace glab
