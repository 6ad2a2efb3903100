/*
Copyright 2026 The revassign Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Kuhn-Munkres for a single matching pass, and its primal-dual
// generalisation (successive shortest augmenting paths with node potentials)
// for the full capacitated problem.

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>

#include "revassign/assign.hpp"

namespace revassign {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGainEpsilon = 1e-12;

// Minimum-cost assignment of every row to a distinct column of a row-major
// rows x cols cost table (rows <= cols). O(rows^2 * cols). Returns the
// column of each row.
std::vector<std::size_t> solve_rectangular(std::size_t rows, std::size_t cols,
                                           std::span<const double> cost) {
  // 1-based; column 0 is the virtual start of each augmenting path.
  std::vector<double> u(rows + 1, 0.0), v(cols + 1, 0.0);
  std::vector<std::size_t> owner(cols + 1, 0), way(cols + 1, 0);
  std::vector<double> minv(cols + 1);
  std::vector<char> used(cols + 1);

  for (std::size_t i = 1; i <= rows; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * cols + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> column_of(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (owner[j] != 0) column_of[owner[j] - 1] = j - 1;
  }
  return column_of;
}

// Min-cost flow on source -> paper -> reviewer -> sink, augmenting one unit
// along the cheapest path while that path still gains weight.
class CapacitatedMatcher {
 public:
  CapacitatedMatcher(const SimilarityMatrix& matrix, int per_paper,
                     std::span<const int> capacities)
      : papers_(matrix.num_papers()),
        reviewers_(matrix.num_reviewers()),
        graph_(papers_ + reviewers_ + 2),
        potential_(graph_.size(), 0.0) {
    const std::size_t source = 0;
    const std::size_t sink = graph_.size() - 1;
    for (std::size_t p = 0; p < papers_; ++p) add_edge(source, paper_node(p), per_paper, 0.0);
    for (std::size_t p = 0; p < papers_; ++p) {
      for (std::size_t r = 0; r < reviewers_; ++r) {
        const double w = matrix.at(r, p);
        if (w > 0.0 && capacities[r] > 0) {
          pair_edges_.push_back({r, p, graph_[paper_node(p)].size()});
          add_edge(paper_node(p), reviewer_node(r), 1, -w);
          potential_[reviewer_node(r)] = std::min(potential_[reviewer_node(r)], -w);
        }
      }
    }
    for (std::size_t r = 0; r < reviewers_; ++r) {
      add_edge(reviewer_node(r), sink, std::max(capacities[r], 0), 0.0);
      potential_[sink] = std::min(potential_[sink], potential_[reviewer_node(r)]);
    }
  }

  int run() {
    int augmentations = 0;
    while (augment()) ++augmentations;
    return augmentations;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& pe : pair_edges_) {
      if (graph_[paper_node(pe.paper)][pe.edge].capacity == 0) out.emplace_back(pe.reviewer, pe.paper);
    }
    return out;
  }

 private:
  struct Edge {
    std::size_t to;
    std::size_t reverse;
    int capacity;
    double cost;
  };
  struct PairEdge {
    std::size_t reviewer;
    std::size_t paper;
    std::size_t edge;
  };

  std::size_t paper_node(std::size_t p) const { return 1 + p; }
  std::size_t reviewer_node(std::size_t r) const { return 1 + papers_ + r; }

  void add_edge(std::size_t from, std::size_t to, int capacity, double cost) {
    graph_[from].push_back({to, graph_[to].size(), capacity, cost});
    graph_[to].push_back({from, graph_[from].size() - 1, 0, -cost});
  }

  bool augment() {
    const std::size_t source = 0;
    const std::size_t sink = graph_.size() - 1;
    std::vector<double> dist(graph_.size(), kInf);
    std::vector<std::pair<std::size_t, std::size_t>> parent(graph_.size(), {0, 0});
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
      auto [d, node] = heap.top();
      heap.pop();
      if (d > dist[node]) continue;
      for (std::size_t e = 0; e < graph_[node].size(); ++e) {
        const Edge& edge = graph_[node][e];
        if (edge.capacity <= 0) continue;
        // Reduced costs are nonnegative up to rounding.
        const double reduced =
            std::max(0.0, edge.cost + potential_[node] - potential_[edge.to]);
        if (d + reduced < dist[edge.to]) {
          dist[edge.to] = d + reduced;
          parent[edge.to] = {node, e};
          heap.push({dist[edge.to], edge.to});
        }
      }
    }
    if (dist[sink] == kInf) return false;
    const double path_cost = dist[sink] - potential_[source] + potential_[sink];
    // Stop once the cheapest path no longer adds weight.
    if (path_cost > -kGainEpsilon) return false;

    double reach = 0.0;
    for (double d : dist) {
      if (d != kInf) reach = std::max(reach, d);
    }
    for (std::size_t n = 0; n < graph_.size(); ++n) {
      potential_[n] += dist[n] == kInf ? reach : dist[n];
    }
    for (std::size_t node = sink; node != source;) {
      auto [prev, e] = parent[node];
      Edge& edge = graph_[prev][e];
      edge.capacity -= 1;
      graph_[node][edge.reverse].capacity += 1;
      node = prev;
    }
    return true;
  }

  std::size_t papers_;
  std::size_t reviewers_;
  std::vector<std::vector<Edge>> graph_;
  std::vector<double> potential_;
  std::vector<PairEdge> pair_edges_;
};

void check_inputs(const SimilarityMatrix& matrix, int reviewers_per_paper,
                  std::span<const int> capacities) {
  if (reviewers_per_paper < 1) {
    throw std::invalid_argument("reviewers per paper must be at least 1");
  }
  if (capacities.size() != matrix.num_reviewers()) {
    throw std::invalid_argument("one capacity per reviewer expected");
  }
}

}  // namespace

std::vector<std::optional<std::size_t>> hungarian_pass(
    const SimilarityMatrix& matrix, std::span<const int> remaining_capacity,
    const std::set<std::pair<std::size_t, std::size_t>>& excluded) {
  if (remaining_capacity.size() != matrix.num_reviewers()) {
    throw std::invalid_argument("one capacity per reviewer expected");
  }
  const std::size_t papers = matrix.num_papers();
  std::vector<std::optional<std::size_t>> result(papers);
  if (papers == 0) return result;

  auto allowed = [&](std::size_t r, std::size_t p) {
    return matrix.at(r, p) > 0.0 && excluded.count({r, p}) == 0;
  };

  // A reviewer with capacity c becomes c interchangeable slots (never more
  // than the number of papers, since a pass gives each paper one reviewer).
  std::vector<std::size_t> slots;
  for (std::size_t r = 0; r < matrix.num_reviewers(); ++r) {
    bool useful = false;
    for (std::size_t p = 0; p < papers && !useful; ++p) useful = allowed(r, p);
    if (!useful) continue;
    const auto copies = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(remaining_capacity[r], 0)), papers);
    slots.insert(slots.end(), copies, r);
  }
  // Pad with dummy slots so that every paper can stay unmatched at cost 0.
  const std::size_t cols = std::max(slots.size(), papers);

  std::vector<double> cost(papers * cols, 0.0);
  for (std::size_t p = 0; p < papers; ++p) {
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (allowed(slots[j], p)) cost[p * cols + j] = -matrix.at(slots[j], p);
    }
  }
  const auto column_of = solve_rectangular(papers, cols, cost);
  for (std::size_t p = 0; p < papers; ++p) {
    const std::size_t j = column_of[p];
    if (j < slots.size() && allowed(slots[j], p)) result[p] = slots[j];
  }
  return result;
}

AssignmentOutcome assign_hungarian(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                   std::span<const int> capacities) {
  check_inputs(matrix, reviewers_per_paper, capacities);
  CapacitatedMatcher matcher(matrix, reviewers_per_paper, capacities);
  const int augmentations = matcher.run();
  return make_outcome(matrix, reviewers_per_paper, matcher.pairs(), "hungarian",
                      augmentations);
}

AssignmentOutcome assign_hungarian_multipass(const SimilarityMatrix& matrix,
                                             int reviewers_per_paper,
                                             std::span<const int> capacities) {
  check_inputs(matrix, reviewers_per_paper, capacities);
  std::vector<int> remaining(capacities.begin(), capacities.end());
  std::set<std::pair<std::size_t, std::size_t>> excluded;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  int passes = 0;
  for (int pass = 0; pass < reviewers_per_paper; ++pass) {
    ++passes;
    const auto matched = hungarian_pass(matrix, remaining, excluded);
    bool progress = false;
    for (std::size_t p = 0; p < matched.size(); ++p) {
      if (!matched[p]) continue;
      const std::size_t r = *matched[p];
      pairs.emplace_back(r, p);
      excluded.emplace(r, p);
      --remaining[r];
      progress = true;
    }
    if (!progress) break;
  }
  return make_outcome(matrix, reviewers_per_paper, std::move(pairs), "multipass", passes);
}

}  // namespace revassign
