// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "graphlab/canonical.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/graph6.hpp"
#include "graphlab/subgraph.hpp"

namespace glab {

// Finite family F defining the monotone class Forb(F). Members are kept up to
// isomorphism; the empty family stands for the class of all graphs.
class ForbiddenFamily {
 public:
  ForbiddenFamily() = default;
  explicit ForbiddenFamily(const std::vector<SimpleGraph>& graphs) {
    std::set<std::string> seen;
    for (const auto& g : graphs) {
      if (!seen.insert(to_graph6(canonical_form(g).graph)).second) continue;
      members_.push_back(g);
      matchers_.emplace_back(g);
    }
  }

  static ForbiddenFamily from_file(const std::string& path) { return ForbiddenFamily(read_graph6_file(path)); }

  [[nodiscard]] const std::vector<SimpleGraph>& members() const noexcept { return members_; }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }

  // True iff g contains no member as a subgraph.
  [[nodiscard]] bool admits(const SimpleGraph& g) const {
    for (const auto& m : matchers_)
      if (m.found_in(g)) return false;
    return true;
  }

  // Same answer as admits(g) provided g minus the edge {u,v} is admitted:
  // only copies through {u,v} are searched.
  [[nodiscard]] bool admits_with_new_edge(const SimpleGraph& g, int u, int v) const {
    for (const auto& m : matchers_)
      if (m.found_through_edge(g, u, v)) return false;
    return true;
  }

 private:
  std::vector<SimpleGraph> members_;
  std::vector<SubgraphMatcher> matchers_;
};

inline bool is_family_free(const SimpleGraph& g, const ForbiddenFamily& family) { return family.admits(g); }

}  // namespace glab
