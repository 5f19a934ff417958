// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphlab/errors.hpp"

namespace glab {

// Finite undirected simple graph on vertices 0..n-1, stored as adjacency bit rows.
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw ValidationError("SimpleGraph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  // Rejects self-loops, out-of-range endpoints and duplicate edges.
  static SimpleGraph from_edges(int n, std::span<const Edge> edges) {
    SimpleGraph g(n);
    for (const auto& [a, b] : edges) {
      g.check_pair(a, b);
      if (g.has_edge(a, b)) {
        throw ValidationError("SimpleGraph: duplicate edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
      }
      g.add_edge(a, b);
    }
    return g;
  }
  static SimpleGraph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int words() const noexcept { return words_; }

  [[nodiscard]] bool has_edge(int a, int b) const noexcept {
    return (adj_[index(a, b)] >> (b & 63)) & 1u;
  }
  void add_edge(int a, int b) {
    check_pair(a, b);
    adj_[index(a, b)] |= bit(b);
    adj_[index(b, a)] |= bit(a);
  }
  void remove_edge(int a, int b) {
    check_pair(a, b);
    adj_[index(a, b)] &= ~bit(b);
    adj_[index(b, a)] &= ~bit(a);
  }
  // Unchecked toggle for hot loops; caller guarantees a != b, both in range.
  void toggle_edge_unchecked(int a, int b) noexcept {
    adj_[index(a, b)] ^= bit(b);
    adj_[index(b, a)] ^= bit(a);
  }

  [[nodiscard]] std::span<const std::uint64_t> row(int v) const noexcept {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  [[nodiscard]] int degree(int v) const noexcept {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  [[nodiscard]] std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (auto w : adj_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
  }

  // Edges {i,j} with i < j in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  // Graph with vertex v renamed to perm[v].
  [[nodiscard]] SimpleGraph relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw ValidationError("relabeled: size mismatch");
    SimpleGraph g(n_);
    for (const auto& [a, b] : edges()) g.add_edge(perm[a], perm[b]);
    return g;
  }

  // True iff every edge of *this is an edge of other (same vertex count).
  [[nodiscard]] bool is_edge_subset_of(const SimpleGraph& other) const noexcept {
    if (other.n_ != n_) return false;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      if ((adj_[i] & ~other.adj_[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  [[nodiscard]] std::size_t index(int a, int b) const noexcept {
    return static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b >> 6);
  }
  static constexpr std::uint64_t bit(int b) noexcept { return std::uint64_t{1} << (b & 63); }
  void check_pair(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw ValidationError("SimpleGraph: vertex out of range");
    if (a == b) throw ValidationError("SimpleGraph: self-loop");
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

inline SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline SimpleGraph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle_graph: need n >= 3");
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Path on n vertices (n - 1 edges).
inline SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace glab
