// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/errors.hpp"
#include "graphlab/extended.hpp"
#include "graphlab/family.hpp"
#include "graphlab/graph.hpp"

namespace glab {

inline constexpr int kChromaticMaxOrder = 16;
inline constexpr int kCrsMaxOrder = 14;

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  return adj;
}

inline int max_clique(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, int size, int best) {
  if (candidates == 0) return std::max(size, best);
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) return best;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(adj, candidates & adj[v], size + 1, best);
  }
  return std::max(size, best);
}

// DSATUR: colors[v] in [0, k) or -1. Returns the number of colors used.
inline int dsatur_greedy(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::uint32_t seen = 0;
      for (std::uint32_t m = adj[v]; m != 0; m &= m - 1)
        if (color[std::countr_zero(m)] >= 0) seen |= 1u << color[std::countr_zero(m)];
      const int sat = std::popcount(seen);
      const int deg = std::popcount(adj[v]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    std::uint32_t seen = 0;
    for (std::uint32_t m = adj[pick]; m != 0; m &= m - 1)
      if (color[std::countr_zero(m)] >= 0) seen |= 1u << color[std::countr_zero(m)];
    color[pick] = std::countr_one(seen);
    used = std::max(used, color[pick] + 1);
  }
  return used;
}

// Exact k-colorability; new colors are opened in order to break symmetry.
inline bool colorable(const std::vector<std::uint32_t>& adj, std::vector<int>& color, int k, int used,
                      int remaining) {
  if (remaining == 0) return true;
  const int n = static_cast<int>(adj.size());
  int pick = -1;
  int pick_sat = -1;
  std::uint32_t pick_seen = 0;
  for (int v = 0; v < n; ++v) {
    if (color[v] >= 0) continue;
    std::uint32_t seen = 0;
    for (std::uint32_t m = adj[v]; m != 0; m &= m - 1)
      if (color[std::countr_zero(m)] >= 0) seen |= 1u << color[std::countr_zero(m)];
    const int sat = std::popcount(seen);
    if (sat > pick_sat) {
      pick = v;
      pick_sat = sat;
      pick_seen = seen;
    }
  }
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((pick_seen >> c) & 1u) continue;
    color[pick] = c;
    if (colorable(adj, color, k, std::max(used, c + 1), remaining - 1)) return true;
  }
  color[pick] = -1;
  return false;
}

}  // namespace detail

// Exact chromatic number: clique lower bound, DSATUR upper bound, and a
// backtracking decision for each k in between. chi(empty vertex set) = 0.
inline int chromatic_number(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kChromaticMaxOrder) {
    throw BudgetError("chromatic_number: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(kChromaticMaxOrder));
  }
  if (n == 0) return 0;
  const auto adj = detail::adjacency_masks(g);
  const int lower = detail::max_clique(adj, (n == 32 ? ~0u : (1u << n) - 1), 0, 0);
  const int upper = detail::dsatur_greedy(adj);
  for (int k = lower; k < upper; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    if (detail::colorable(adj, color, k, 0, n)) return k;
  }
  return upper;
}

// col(F) = min over members of chi; infinity for the empty family.
inline ExtendedNat coloring_number(const ForbiddenFamily& family) {
  if (family.empty()) return kInfinity;
  int best = -1;
  for (const auto& f : family.members()) {
    const int chi = chromatic_number(f);
    if (best < 0 || chi < best) best = chi;
  }
  return best;
}

enum class PartKind { kClique, kIndependent };

struct CrsWitness {
  struct Slot {
    int part;
    PartKind kind;
  };
  std::vector<Slot> assignment;  // per vertex
};

// Membership in C(r, s): a partition into s cliques (parts 0..s-1) and r - s
// independent sets (parts s..r-1), any of them possibly empty.
inline std::optional<CrsWitness> crs_member(const SimpleGraph& g, int r, int s) {
  if (r < 1 || s < 0 || s > r) throw ValidationError("crs_member: need r >= 1 and 0 <= s <= r");
  const int n = g.order();
  if (n > kCrsMaxOrder) {
    throw BudgetError("crs_member: n = " + std::to_string(n) + " exceeds budget " + std::to_string(kCrsMaxOrder));
  }
  const auto adj = detail::adjacency_masks(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });

  std::vector<std::uint32_t> members(static_cast<std::size_t>(r), 0);
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);

  auto fits = [&](int v, int p) {
    return p < s ? (members[p] & ~adj[v]) == 0 : (members[p] & adj[v]) == 0;
  };
  auto assign = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    const int v = order[idx];
    bool tried_empty_clique = false;
    bool tried_empty_indep = false;
    for (int p = 0; p < r; ++p) {
      if (members[p] == 0) {
        bool& tried = p < s ? tried_empty_clique : tried_empty_indep;
        if (tried) continue;
        tried = true;
      }
      if (!fits(v, p)) continue;
      members[p] |= 1u << v;
      part_of[v] = p;
      if (self(self, idx + 1)) return true;
      members[p] &= ~(1u << v);
      part_of[v] = -1;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;

  CrsWitness witness;
  for (int v = 0; v < n; ++v)
    witness.assignment.push_back({part_of[v], part_of[v] < s ? PartKind::kClique : PartKind::kIndependent});
  return witness;
}

}  // namespace glab
