// SPDX-License-Identifier: Apache-2.0
//
// Canonical labeling and automorphism group order by individualization and
// refinement. Nodes of the search tree are ordered partitions refined to be
// equitable; leaves are discrete partitions, i.e. vertex orderings. The
// canonical form is the leaf whose relabeled adjacency matrix is
// lexicographically largest.
//
// Automorphisms are collected whenever a leaf reproduces the first leaf's (or
// the current best leaf's) matrix. Children of a node that lie in one orbit of
// the automorphisms fixing the node's prefix are explored once. Along the first
// path, |Aut| is the product of the orbit sizes of the first child at each
// level (orbit-stabilizer along the stabilizer chain).
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "graphlab/errors.hpp"
#include "graphlab/graph.hpp"

namespace glab {

inline constexpr int kCanonicalMaxOrder = 12;

struct CanonicalForm {
  SimpleGraph graph;          // relabeled so that old vertex labeling[p] becomes p
  std::vector<int> labeling;  // position -> original vertex
  std::uint64_t automorphisms = 1;
};

namespace detail {

class Canonizer {
 public:
  using Partition = std::vector<std::vector<int>>;

  explicit Canonizer(const SimpleGraph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
    for (const auto& [a, b] : g.edges()) {
      adj_[a] |= 1u << b;
      adj_[b] |= 1u << a;
    }
  }

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) return out;
    Partition root{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(root[0].begin(), root[0].end(), 0);
    refine(root);
    std::vector<int> prefix;
    search(root, prefix);
    out.labeling = best_labeling_;
    out.automorphisms = aut_order_;
    out.graph = SimpleGraph(n_);
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) position[best_labeling_[p]] = p;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if ((adj_[a] >> b) & 1u) out.graph.add_edge(position[a], position[b]);
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  // Split every cell by neighbor counts into each cell until the number of cells
  // stops growing. Split pieces are ordered by their count signature.
  void refine(Partition& part) const {
    for (;;) {
      std::vector<std::uint32_t> masks;
      masks.reserve(part.size());
      for (const auto& cell : part) {
        std::uint32_t m = 0;
        for (int v : cell) m |= 1u << v;
        masks.push_back(m);
      }
      Partition next;
      for (const auto& cell : part) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int v : cell) {
          std::vector<int> sig(masks.size());
          for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = std::popcount(adj_[v] & masks[c]);
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size();) {
          std::vector<int> piece;
          std::size_t j = i;
          for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) piece.push_back(keyed[j].second);
          next.push_back(std::move(piece));
          i = j;
        }
      }
      const bool stable = next.size() == part.size();
      part = std::move(next);
      if (stable) return;
    }
  }

  // Row-by-row adjacency of the relabeled graph; larger is better.
  [[nodiscard]] std::vector<std::uint32_t> code_of(const std::vector<int>& labeling) const {
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) position[labeling[p]] = p;
    std::vector<std::uint32_t> code(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) {
      std::uint32_t row = 0;
      for (std::uint32_t m = adj_[labeling[p]]; m != 0; m &= m - 1) {
        row |= 1u << (n_ - 1 - position[std::countr_zero(m)]);
      }
      code[p] = row;
    }
    return code;
  }

  // vertex first[p] -> vertex second[p]
  void add_generator(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) perm[first[p]] = second[p];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && perm[v] == v;
    if (!identity) generators_.push_back(std::move(perm));
  }

  // Orbit representative of each vertex under the generators fixing `prefix`.
  [[nodiscard]] std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int v : prefix) fixes = fixes && g[v] == v;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns the level to unwind to, or kNoJump.
  int search(const Partition& part, std::vector<int>& prefix) {
    const int level = static_cast<int>(prefix.size());
    if (static_cast<int>(part.size()) == n_) return leaf(part, prefix);

    std::size_t target = part.size();
    for (std::size_t c = 0; c < part.size(); ++c)
      if (part[c].size() > 1 && (target == part.size() || part[c].size() < part[target].size())) target = c;
    std::vector<int> cell = part[target];
    std::sort(cell.begin(), cell.end());

    const bool first_path = !have_first_ || on_first_path(prefix);
    std::vector<int> explored;
    for (int v : cell) {
      const auto orbit = orbits_fixing(prefix);
      bool covered = false;
      for (int u : explored) covered = covered || orbit[u] == orbit[v];
      if (covered) continue;
      explored.push_back(v);

      Partition child;
      child.reserve(part.size() + 1);
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (c != target) {
          child.push_back(part[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : part[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(v);
      const int jump = search(child, prefix);
      prefix.pop_back();
      if (jump != kNoJump && jump < level) return jump;
    }

    if (first_path) {
      const auto orbit = orbits_fixing(prefix);
      std::uint64_t size = 0;
      for (int v : cell) size += orbit[v] == orbit[cell.front()] ? 1 : 0;
      aut_order_ *= size;
    }
    return kNoJump;
  }

  [[nodiscard]] bool on_first_path(const std::vector<int>& prefix) const {
    return std::equal(prefix.begin(), prefix.end(), first_prefix_.begin());
  }

  int leaf(const Partition& part, const std::vector<int>& prefix) {
    std::vector<int> labeling;
    labeling.reserve(static_cast<std::size_t>(n_));
    for (const auto& cell : part) labeling.push_back(cell.front());
    auto code = code_of(labeling);
    if (!have_first_) {
      have_first_ = true;
      first_prefix_ = prefix;
      first_labeling_ = labeling;
      first_code_ = code;
      best_labeling_ = labeling;
      best_code_ = std::move(code);
      return kNoJump;
    }
    if (code == first_code_) {
      add_generator(first_labeling_, labeling);
      // Unwind to the deepest first-path ancestor.
      std::size_t common = 0;
      while (common < prefix.size() && prefix[common] == first_prefix_[common]) ++common;
      return static_cast<int>(common);
    }
    if (code == best_code_) {
      add_generator(best_labeling_, labeling);
    } else if (code > best_code_) {
      best_code_ = std::move(code);
      best_labeling_ = labeling;
    }
    return kNoJump;
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::vector<int>> generators_;
  bool have_first_ = false;
  std::vector<int> first_prefix_;
  std::vector<int> first_labeling_;
  std::vector<std::uint32_t> first_code_;
  std::vector<int> best_labeling_;
  std::vector<std::uint32_t> best_code_;
  std::uint64_t aut_order_ = 1;
};

}  // namespace detail

inline CanonicalForm canonical_form(const SimpleGraph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw BudgetError("canonical_form: n = " + std::to_string(g.order()) + " exceeds budget " +
                      std::to_string(kCanonicalMaxOrder));
  }
  return detail::Canonizer(g).run();
}

}  // namespace glab
