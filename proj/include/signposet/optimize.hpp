// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SIGNPOSET_OPTIMIZE_HPP
#define SIGNPOSET_OPTIMIZE_HPP

#include <cstdint>
#include <vector>

namespace signposet::opt {

inline constexpr int kUnmatched = -1;

struct Matching {
  std::vector<int> left_to_right;  // kUnmatched when free
  std::vector<int> right_to_left;
  std::size_t size = 0;
};

/// Maximum bipartite matching; adjacency[u] lists right vertices of left u.
Matching hopcroft_karp(int right_count, const std::vector<std::vector<int>>& adjacency);

/// Left/right vertices reachable from free left vertices by alternating paths.
/// (L \ Z) ∪ (R ∩ Z) is a minimum vertex cover (König).
struct AlternatingReach {
  std::vector<bool> left;
  std::vector<bool> right;
};
AlternatingReach alternating_reach(const std::vector<std::vector<int>>& adjacency,
                                   const Matching& matching);

/// Integer max flow (Dinic).
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);
  int add_edge(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);
  std::int64_t flow_on(int edge) const;

 private:
  struct Edge {
    int to;
    std::int64_t capacity;
  };
  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<std::int64_t> original_;
};

/// Min-cost flow by successive shortest paths with potentials. Supports
/// negative edge costs as long as the initial network has no negative cycle.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes);
  int add_edge(int from, int to, std::int64_t capacity, std::int64_t cost);

  /// Pushes one unit along a cheapest path while that path costs less than
  /// `stop_at`. Returns the total cost of all units pushed.
  std::int64_t run_while_cheaper(int source, int sink, std::int64_t stop_at);

  std::int64_t flow_on(int edge) const;
  std::int64_t flow_value() const { return flow_; }

 private:
  struct Edge {
    int to;
    std::int64_t capacity;
    std::int64_t cost;
  };
  void bellman_ford(int source);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> graph_;
  std::vector<std::int64_t> potential_;
  std::vector<std::int64_t> original_;
  std::int64_t flow_ = 0;
};

}  // namespace signposet::opt

#endif  // SIGNPOSET_OPTIMIZE_HPP
