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

// Assignment algorithms over a similarity matrix.
//
// All of them take the matrix, the number m of reviewers wanted per paper and
// a capacity per reviewer (aligned with the matrix rows), and never emit a
// zero-weight pair: a paper that cannot get m competent reviewers is reported
// as uncovered instead.

#ifndef REVASSIGN_ASSIGN_HPP_
#define REVASSIGN_ASSIGN_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revassign/core.hpp"

namespace revassign {

struct Candidate {
  std::size_t reviewer;
  double weight;
};

// Per paper, the reviewers with a nonzero weight, best first. Ties are
// broken by reviewer order.
class SortedColumns {
 public:
  // Reviewers whose `remaining_capacity` is not positive are left out; an
  // empty span keeps everyone. `excluded` holds (reviewer, paper) cells to
  // skip.
  explicit SortedColumns(const SimilarityMatrix& matrix,
                         std::span<const int> remaining_capacity = {},
                         const std::set<std::pair<std::size_t, std::size_t>>& excluded = {});

  std::size_t num_papers() const { return columns_.size(); }
  std::span<const Candidate> column(std::size_t paper) const { return columns_[paper]; }
  // Scarcity of a paper: how many reviewers could take it.
  std::size_t candidate_count(std::size_t paper) const { return columns_[paper].size(); }

 private:
  std::vector<std::vector<Candidate>> columns_;
};

// Renders the columns side by side, one row per rank, e.g.
// "R1 => 0.40" cells and "-" where a column has run out.
std::string format_sorted_columns(const SortedColumns& columns,
                                  const SimilarityMatrix& matrix);

struct UncoveredPaper {
  PaperId paper;
  int shortfall = 0;

  friend bool operator==(const UncoveredPaper&, const UncoveredPaper&) = default;
};

struct AssignmentOutcome {
  AssignmentSet assignment;
  std::vector<UncoveredPaper> uncovered;
  double total_weight = 0.0;
  std::string algorithm;
  // Matching passes (Hungarian multipass), rounds (heuristic, greedy) or
  // augmentations (exact Hungarian).
  int rounds = 0;

  // Papers that received all m reviewers.
  std::size_t covered_papers(std::size_t num_papers) const;
};

// Builds an outcome from (reviewer, paper) index pairs: copies weights, sorts
// pairs by paper then reviewer order and lists the papers short of m.
AssignmentOutcome make_outcome(const SimilarityMatrix& matrix, int reviewers_per_paper,
                               std::vector<std::pair<std::size_t, std::size_t>> pairs,
                               std::string algorithm, int rounds);

// One maximum-weight matching pass: each paper gets at most one reviewer and
// a reviewer with c remaining capacity may take up to c papers. Zero-weight
// and excluded (reviewer, paper) cells are never used. Returns, per paper,
// the chosen reviewer index.
std::vector<std::optional<std::size_t>> hungarian_pass(
    const SimilarityMatrix& matrix, std::span<const int> remaining_capacity,
    const std::set<std::pair<std::size_t, std::size_t>>& excluded = {});

// Maximum weight of matching subject to per-paper m and per-reviewer
// capacity.
AssignmentOutcome assign_hungarian(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                   std::span<const int> capacities);

// m successive hungarian_pass calls, each excluding the pairs already made
// and using the capacity left over. Equal to assign_hungarian for m = 1;
// can fall short of it for m > 1.
AssignmentOutcome assign_hungarian_multipass(const SimilarityMatrix& matrix,
                                             int reviewers_per_paper,
                                             std::span<const int> capacities);

// Sequential greedy: papers in `paper_order` (default: matrix order), each
// taking its m best reviewers that still have capacity.
AssignmentOutcome assign_greedy(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                std::span<const int> capacities,
                                std::span<const std::size_t> paper_order = {});

// Scarcity-prioritised proposal heuristic. See heuristic.cpp.
AssignmentOutcome assign_heuristic(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                   std::span<const int> capacities);

// Largest instance brute_force_optimal accepts.
inline constexpr std::size_t kBruteForceMaxSlots = 10;      // papers * m
inline constexpr std::size_t kBruteForceMaxReviewers = 8;

// Exhaustive search for the optimum; throws std::invalid_argument above the
// size bound. Test oracle.
AssignmentOutcome brute_force_optimal(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                      std::span<const int> capacities);

}  // namespace revassign

#endif  // REVASSIGN_ASSIGN_HPP_
