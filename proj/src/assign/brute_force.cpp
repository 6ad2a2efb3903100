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

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "revassign/assign.hpp"

namespace revassign {

// Depth-first over papers; for each paper every subset of at most m
// competent reviewers with capacity left. Branches that cannot beat the best
// found so far, even if every remaining paper got its m heaviest edges, are
// cut.
AssignmentOutcome brute_force_optimal(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                      std::span<const int> capacities) {
  if (reviewers_per_paper < 1) {
    throw std::invalid_argument("reviewers per paper must be at least 1");
  }
  if (capacities.size() != matrix.num_reviewers()) {
    throw std::invalid_argument("one capacity per reviewer expected");
  }
  const std::size_t papers = matrix.num_papers();
  const std::size_t m = static_cast<std::size_t>(reviewers_per_paper);
  if (papers * m > kBruteForceMaxSlots || matrix.num_reviewers() > kBruteForceMaxReviewers) {
    throw std::invalid_argument("instance too large for exhaustive search");
  }

  std::vector<std::vector<std::size_t>> competent(papers);
  std::vector<double> bound_from(papers + 1, 0.0);
  for (std::size_t p = papers; p-- > 0;) {
    std::vector<double> ws;
    for (std::size_t r = 0; r < matrix.num_reviewers(); ++r) {
      if (matrix.at(r, p) > 0.0) {
        competent[p].push_back(r);
        ws.push_back(matrix.at(r, p));
      }
    }
    std::sort(ws.rbegin(), ws.rend());
    double top = 0.0;
    for (std::size_t i = 0; i < std::min(m, ws.size()); ++i) top += ws[i];
    bound_from[p] = bound_from[p + 1] + top;
  }

  std::vector<int> remaining(capacities.begin(), capacities.end());
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<std::pair<std::size_t, std::size_t>> best;
  double best_weight = -1.0;

  std::function<void(std::size_t, double)> visit_paper;
  // Chooses reviewers for paper p from competent[p][from..].
  std::function<void(std::size_t, std::size_t, std::size_t, double)> choose =
      [&](std::size_t p, std::size_t from, std::size_t taken, double weight) {
        visit_paper(p + 1, weight);
        if (taken == m) return;
        for (std::size_t i = from; i < competent[p].size(); ++i) {
          const std::size_t r = competent[p][i];
          if (remaining[r] <= 0) continue;
          --remaining[r];
          current.emplace_back(r, p);
          choose(p, i + 1, taken + 1, weight + matrix.at(r, p));
          current.pop_back();
          ++remaining[r];
        }
      };
  visit_paper = [&](std::size_t p, double weight) {
    if (weight + bound_from[p] <= best_weight + kWeightTolerance * 1e-3) return;
    if (p == papers) {
      best_weight = weight;
      best = current;
      return;
    }
    choose(p, 0, 0, weight);
  };
  visit_paper(0, 0.0);

  return make_outcome(matrix, reviewers_per_paper, std::move(best), "brute-force", 1);
}

}  // namespace revassign
