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
#include <cstdio>
#include <sstream>

#include "revassign/assign.hpp"

namespace revassign {

SortedColumns::SortedColumns(const SimilarityMatrix& matrix,
                             std::span<const int> remaining_capacity,
                             const std::set<std::pair<std::size_t, std::size_t>>& excluded)
    : columns_(matrix.num_papers()) {
  for (std::size_t p = 0; p < matrix.num_papers(); ++p) {
    auto& col = columns_[p];
    for (std::size_t r = 0; r < matrix.num_reviewers(); ++r) {
      if (!remaining_capacity.empty() && remaining_capacity[r] <= 0) continue;
      const double w = matrix.at(r, p);
      if (w <= 0.0 || excluded.count({r, p}) != 0) continue;
      col.push_back({r, w});
    }
    std::stable_sort(col.begin(), col.end(), [](const Candidate& a, const Candidate& b) {
      return a.weight > b.weight;
    });
  }
}

std::string format_sorted_columns(const SortedColumns& columns,
                                  const SimilarityMatrix& matrix) {
  std::size_t depth = 0;
  for (std::size_t p = 0; p < columns.num_papers(); ++p) {
    depth = std::max(depth, columns.candidate_count(p));
  }
  std::ostringstream out;
  for (std::size_t p = 0; p < columns.num_papers(); ++p) {
    out << (p ? "\t" : "") << matrix.paper_ids()[p];
  }
  out << '\n';
  for (std::size_t row = 0; row < depth; ++row) {
    for (std::size_t p = 0; p < columns.num_papers(); ++p) {
      if (p) out << '\t';
      auto col = columns.column(p);
      if (row < col.size()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", col[row].weight);
        out << matrix.reviewer_ids()[col[row].reviewer] << " => " << buf;
      } else {
        out << '-';
      }
    }
    out << '\n';
  }
  return out.str();
}

std::size_t AssignmentOutcome::covered_papers(std::size_t num_papers) const {
  return num_papers - uncovered.size();
}

AssignmentOutcome make_outcome(const SimilarityMatrix& matrix, int reviewers_per_paper,
                               std::vector<std::pair<std::size_t, std::size_t>> pairs,
                               std::string algorithm, int rounds) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });

  AssignmentOutcome out;
  out.algorithm = std::move(algorithm);
  out.rounds = rounds;
  std::vector<int> load(matrix.num_papers(), 0);
  for (const auto& [r, p] : pairs) {
    const double w = matrix.at(r, p);
    out.assignment.pairs.push_back({matrix.paper_ids()[p], matrix.reviewer_ids()[r], w});
    ++load[p];
  }
  for (std::size_t p = 0; p < matrix.num_papers(); ++p) {
    if (load[p] < reviewers_per_paper) {
      out.uncovered.push_back({matrix.paper_ids()[p], reviewers_per_paper - load[p]});
    }
  }
  out.total_weight = weight_of_matching(out.assignment);
  return out;
}

}  // namespace revassign
