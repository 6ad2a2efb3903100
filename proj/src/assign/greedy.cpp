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

#include <numeric>
#include <stdexcept>

#include "revassign/assign.hpp"

namespace revassign {

AssignmentOutcome assign_greedy(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                std::span<const int> capacities,
                                std::span<const std::size_t> paper_order) {
  if (reviewers_per_paper < 1) {
    throw std::invalid_argument("reviewers per paper must be at least 1");
  }
  if (capacities.size() != matrix.num_reviewers()) {
    throw std::invalid_argument("one capacity per reviewer expected");
  }
  std::vector<std::size_t> order(paper_order.begin(), paper_order.end());
  if (order.empty()) {
    order.resize(matrix.num_papers());
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<char> seen(matrix.num_papers(), 0);
  for (std::size_t p : order) {
    if (p >= matrix.num_papers() || seen[p]) {
      throw std::invalid_argument("paper order must be a permutation of the papers");
    }
    seen[p] = 1;
  }
  if (order.size() != matrix.num_papers()) {
    throw std::invalid_argument("paper order must be a permutation of the papers");
  }

  std::vector<int> remaining(capacities.begin(), capacities.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const SortedColumns columns(matrix);
  for (std::size_t p : order) {
    int taken = 0;
    for (const auto& c : columns.column(p)) {
      if (taken == reviewers_per_paper) break;
      if (remaining[c.reviewer] <= 0) continue;
      --remaining[c.reviewer];
      pairs.emplace_back(c.reviewer, p);
      ++taken;
    }
  }
  return make_outcome(matrix, reviewers_per_paper, std::move(pairs), "greedy", 1);
}

}  // namespace revassign
