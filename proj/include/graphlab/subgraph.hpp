// SPDX-License-Identifier: Apache-2.0
//
// Non-induced subgraph containment: is there an injective map of the pattern's
// vertices into the host that sends every pattern edge to a host edge?
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "graphlab/graph.hpp"

namespace glab {

class SubgraphMatcher {
 public:
  explicit SubgraphMatcher(SimpleGraph pattern) : pattern_(std::move(pattern)) {
    full_plan_ = make_plan({});
    for (const auto& [x, y] : pattern_.edges()) {
      rooted_plans_.push_back(make_plan({x, y}));
      rooted_plans_.push_back(make_plan({y, x}));
    }
  }

  [[nodiscard]] const SimpleGraph& pattern() const noexcept { return pattern_; }

  [[nodiscard]] bool found_in(const SimpleGraph& host) const {
    if (pattern_.order() > host.order() || pattern_.edge_count() > host.edge_count()) return false;
    return run(host, full_plan_, {});
  }

  // Is there a copy of the pattern that uses the host edge {u, v}?
  [[nodiscard]] bool found_through_edge(const SimpleGraph& host, int u, int v) const {
    if (pattern_.order() > host.order() || !host.has_edge(u, v)) return false;
    for (const auto& plan : rooted_plans_)
      if (run(host, plan, {u, v})) return true;
    return false;
  }

 private:
  struct Plan {
    std::vector<int> order;                 // pattern vertex placed at each depth
    std::vector<std::vector<int>> earlier;  // depths of already-placed neighbors
    std::vector<int> degree;                // pattern degree at each depth
  };

  // Fixed prefix first, then repeatedly the vertex with the most placed
  // neighbors (ties: higher degree, lower index).
  [[nodiscard]] Plan make_plan(std::vector<int> prefix) const {
    const int k = pattern_.order();
    Plan plan;
    std::vector<int> depth_of(static_cast<std::size_t>(k), -1);
    auto place = [&](int x) {
      depth_of[x] = static_cast<int>(plan.order.size());
      plan.order.push_back(x);
    };
    for (int x : prefix) place(x);
    while (static_cast<int>(plan.order.size()) < k) {
      int pick = -1;
      int pick_links = -1;
      int pick_degree = -1;
      for (int x = 0; x < k; ++x) {
        if (depth_of[x] >= 0) continue;
        int links = 0;
        for (int y : plan.order) links += pattern_.has_edge(x, y) ? 1 : 0;
        const int d = pattern_.degree(x);
        if (links > pick_links || (links == pick_links && d > pick_degree)) {
          pick = x;
          pick_links = links;
          pick_degree = d;
        }
      }
      place(pick);
    }
    for (int p = 0; p < k; ++p) {
      std::vector<int> back;
      for (int q = 0; q < p; ++q)
        if (pattern_.has_edge(plan.order[p], plan.order[q])) back.push_back(q);
      plan.earlier.push_back(std::move(back));
      plan.degree.push_back(pattern_.degree(plan.order[p]));
    }
    return plan;
  }

  bool run(const SimpleGraph& host, const Plan& plan, std::initializer_list<int> fixed) const {
    const int k = pattern_.order();
    if (k == 0) return true;
    State st{host, plan, std::vector<int>(static_cast<std::size_t>(k), -1),
             std::vector<std::uint64_t>(static_cast<std::size_t>(host.words()), 0),
             std::vector<std::uint64_t>(static_cast<std::size_t>(host.words()) * k, 0)};
    int depth = 0;
    for (int v : fixed) {
      if (host.degree(v) < plan.degree[depth]) return false;
      st.image[depth++] = v;
      st.used[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    return extend(st, depth);
  }

  struct State {
    const SimpleGraph& host;
    const Plan& plan;
    std::vector<int> image;
    std::vector<std::uint64_t> used;
    std::vector<std::uint64_t> scratch;
  };

  static bool extend(State& st, int depth) {
    const int k = static_cast<int>(st.plan.order.size());
    if (depth == k) return true;
    const int words = st.host.words();
    std::uint64_t* cand = st.scratch.data() + static_cast<std::size_t>(depth) * words;
    const auto& back = st.plan.earlier[depth];
    if (back.empty()) {
      const int n = st.host.order();
      for (int w = 0; w < words; ++w) {
        const int bits = std::min(64, n - 64 * w);
        cand[w] = (bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1)) & ~st.used[w];
      }
    } else {
      const auto first = st.host.row(st.image[back[0]]);
      for (int w = 0; w < words; ++w) cand[w] = first[w] & ~st.used[w];
      for (std::size_t b = 1; b < back.size(); ++b) {
        const auto r = st.host.row(st.image[back[b]]);
        for (int w = 0; w < words; ++w) cand[w] &= r[w];
      }
    }
    for (int w = 0; w < words; ++w) {
      while (cand[w] != 0) {
        const int bit = std::countr_zero(cand[w]);
        cand[w] &= cand[w] - 1;
        const int v = 64 * w + bit;
        if (st.host.degree(v) < st.plan.degree[depth]) continue;
        st.image[depth] = v;
        st.used[w] |= std::uint64_t{1} << bit;
        const bool hit = extend(st, depth + 1);
        st.used[w] &= ~(std::uint64_t{1} << bit);
        if (hit) return true;
      }
    }
    return false;
  }

  SimpleGraph pattern_;
  Plan full_plan_;
  std::vector<Plan> rooted_plans_;
};

// True iff some (not necessarily induced) subgraph of g is isomorphic to f.
inline bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& f) {
  return SubgraphMatcher(f).found_in(g);
}

}  // namespace glab
