// Copyright 2026 The signposet Authors
// SPDX-License-Identifier: Apache-2.0

#include "signposet/optimize.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace signposet::opt {

namespace {
constexpr int kInfLevel = std::numeric_limits<int>::max();
constexpr std::int64_t kInfCost = std::numeric_limits<std::int64_t>::max() / 4;
}  // namespace

Matching hopcroft_karp(int right_count, const std::vector<std::vector<int>>& adjacency) {
  const int left_count = static_cast<int>(adjacency.size());
  Matching m;
  m.left_to_right.assign(static_cast<std::size_t>(left_count), kUnmatched);
  m.right_to_left.assign(static_cast<std::size_t>(right_count), kUnmatched);
  std::vector<int> dist(static_cast<std::size_t>(left_count));

  auto bfs = [&] {
    std::queue<int> q;
    bool reachable_free = false;
    for (int u = 0; u < left_count; ++u) {
      if (m.left_to_right[u] == kUnmatched) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInfLevel;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adjacency[u]) {
        const int w = m.right_to_left[v];
        if (w == kUnmatched) {
          reachable_free = true;
        } else if (dist[w] == kInfLevel) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  };

  std::vector<std::size_t> cursor(static_cast<std::size_t>(left_count));
  std::function<bool(int)> dfs = [&](int u) -> bool {
    for (auto& i = cursor[u]; i < adjacency[u].size(); ++i) {
      const int v = adjacency[u][i];
      const int w = m.right_to_left[v];
      if (w == kUnmatched || (dist[w] == dist[u] + 1 && dfs(w))) {
        m.left_to_right[u] = v;
        m.right_to_left[v] = u;
        ++i;
        return true;
      }
    }
    dist[u] = kInfLevel;
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int u = 0; u < left_count; ++u) {
      if (m.left_to_right[u] == kUnmatched && dfs(u)) ++m.size;
    }
  }
  return m;
}

AlternatingReach alternating_reach(const std::vector<std::vector<int>>& adjacency,
                                   const Matching& matching) {
  AlternatingReach reach;
  reach.left.assign(adjacency.size(), false);
  reach.right.assign(matching.right_to_left.size(), false);
  std::queue<int> q;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    if (matching.left_to_right[u] == kUnmatched) {
      reach.left[u] = true;
      q.push(static_cast<int>(u));
    }
  }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adjacency[u]) {
      if (reach.right[v] || matching.left_to_right[u] == v) continue;
      reach.right[v] = true;
      const int w = matching.right_to_left[v];
      if (w != kUnmatched && !reach.left[w]) {
        reach.left[w] = true;
        q.push(w);
      }
    }
  }
  return reach;
}

MaxFlow::MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity});
  edges_.push_back({from, 0});
  original_.push_back(capacity);
  original_.push_back(0);
  graph_[from].push_back(id);
  graph_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(graph_.size(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int id : graph_[u]) {
      const Edge& e = edges_[id];
      if (e.capacity > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[u] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit) {
  if (node == sink) return limit;
  for (auto& i = cursor_[node]; i < graph_[node].size(); ++i) {
    const int id = graph_[node][i];
    Edge& e = edges_[id];
    if (e.capacity <= 0 || level_[e.to] != level_[node] + 1) continue;
    const std::int64_t pushed = push(e.to, sink, std::min(limit, e.capacity));
    if (pushed > 0) {
      e.capacity -= pushed;
      edges_[id ^ 1].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(graph_.size(), 0);
    while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::int64_t MaxFlow::flow_on(int edge) const {
  return original_[static_cast<std::size_t>(edge)] - edges_[static_cast<std::size_t>(edge)].capacity;
}

MinCostFlow::MinCostFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

int MinCostFlow::add_edge(int from, int to, std::int64_t capacity, std::int64_t cost) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity, cost});
  edges_.push_back({from, 0, -cost});
  original_.push_back(capacity);
  original_.push_back(0);
  graph_[from].push_back(id);
  graph_[to].push_back(id + 1);
  return id;
}

void MinCostFlow::bellman_ford(int source) {
  potential_.assign(graph_.size(), kInfCost);
  potential_[source] = 0;
  for (std::size_t round = 0; round < graph_.size(); ++round) {
    bool changed = false;
    for (std::size_t u = 0; u < graph_.size(); ++u) {
      if (potential_[u] == kInfCost) continue;
      for (int id : graph_[u]) {
        const Edge& e = edges_[id];
        if (e.capacity > 0 && potential_[u] + e.cost < potential_[e.to]) {
          potential_[e.to] = potential_[u] + e.cost;
          changed = true;
        }
      }
    }
    if (!changed) return;
  }
  throw std::logic_error("negative cycle in min-cost flow network");
}

std::int64_t MinCostFlow::run_while_cheaper(int source, int sink, std::int64_t stop_at) {
  bellman_ford(source);
  for (auto& p : potential_) {
    if (p == kInfCost) p = 0;
  }
  const std::size_t nodes = graph_.size();
  std::int64_t total = 0;
  std::vector<std::int64_t> dist(nodes);
  std::vector<int> via(nodes);
  using Item = std::pair<std::int64_t, int>;
  while (true) {
    std::fill(dist.begin(), dist.end(), kInfCost);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (int id : graph_[u]) {
        const Edge& e = edges_[id];
        if (e.capacity <= 0) continue;
        const std::int64_t nd = d + e.cost + potential_[u] - potential_[e.to];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          via[e.to] = id;
          heap.emplace(nd, e.to);
        }
      }
    }
    if (dist[sink] == kInfCost) break;
    const std::int64_t path_cost = dist[sink] - potential_[source] + potential_[sink];
    if (path_cost >= stop_at) break;
    for (std::size_t u = 0; u < nodes; ++u) {
      if (dist[u] < kInfCost) potential_[u] += dist[u];
    }
    for (int v = sink; v != source; v = edges_[via[v] ^ 1].to) {
      edges_[via[v]].capacity -= 1;
      edges_[via[v] ^ 1].capacity += 1;
    }
    total += path_cost;
    ++flow_;
  }
  return total;
}

std::int64_t MinCostFlow::flow_on(int edge) const {
  return original_[static_cast<std::size_t>(edge)] - edges_[static_cast<std::size_t>(edge)].capacity;
}

}  // namespace signposet::opt
