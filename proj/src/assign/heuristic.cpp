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

// Scarcity-prioritised assignment in m rounds. Each round gives every paper
// at most one new reviewer:
//
//  1. Sort every paper's column of candidate reviewers by weight, keeping
//     only reviewers with capacity left and pairs not made in earlier rounds.
//  2. The scarcity of a paper is the length of its column.
//  3. Unplaced papers propose to their best remaining candidate. A reviewer
//     asked by more papers than it has capacity for keeps the scarcest ones
//     (then the heavier edges, then matrix order) and rejects the rest; a
//     rejected paper drops that candidate and proposes to the next one.
//  4. Papers still unplaced when proposals stop try an augmenting path: a
//     competent reviewer is freed by moving one of its papers to another of
//     that paper's candidates, and so on along the chain.
//
// Nothing is committed until the round settles; then all placements are
// made at once. Each candidate is dropped at most once, so step 3 is
// O(papers * reviewers) per round.

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "revassign/assign.hpp"

namespace revassign {

namespace {

class Round {
 public:
  Round(const SimilarityMatrix& matrix, const SortedColumns& columns,
        std::span<const int> remaining)
      : matrix_(matrix),
        columns_(columns),
        remaining_(remaining),
        next_(columns.num_papers(), 0),
        holder_(columns.num_papers()),
        held_(matrix.num_reviewers()) {}

  std::vector<std::optional<std::size_t>> run() {
    propose();
    repair();
    return holder_;
  }

 private:
  // Whether reviewer r keeps paper a over paper b.
  bool prefers(std::size_t r, std::size_t a, std::size_t b) const {
    const std::size_t na = columns_.candidate_count(a);
    const std::size_t nb = columns_.candidate_count(b);
    if (na != nb) return na < nb;
    const double wa = matrix_.at(r, a);
    const double wb = matrix_.at(r, b);
    if (wa != wb) return wa > wb;
    return a < b;
  }

  bool has_room(std::size_t r) const {
    return static_cast<int>(held_[r].size()) < remaining_[r];
  }

  void propose() {
    std::deque<std::size_t> queue;
    for (std::size_t p = 0; p < columns_.num_papers(); ++p) {
      if (columns_.candidate_count(p) > 0) queue.push_back(p);
    }
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      const auto column = columns_.column(p);
      if (next_[p] >= column.size()) continue;

      const std::size_t r = column[next_[p]].reviewer;
      held_[r].push_back(p);
      holder_[p] = r;
      if (static_cast<int>(held_[r].size()) <= remaining_[r]) continue;

      auto worst = std::min_element(held_[r].begin(), held_[r].end(),
                                    [&](std::size_t a, std::size_t b) {
                                      return prefers(r, b, a);
                                    });
      const std::size_t rejected = *worst;
      held_[r].erase(worst);
      holder_[rejected].reset();
      ++next_[rejected];
      queue.push_back(rejected);
    }
  }

  void repair() {
    std::vector<std::size_t> unplaced;
    for (std::size_t p = 0; p < columns_.num_papers(); ++p) {
      if (!holder_[p] && columns_.candidate_count(p) > 0) unplaced.push_back(p);
    }
    std::stable_sort(unplaced.begin(), unplaced.end(), [&](std::size_t a, std::size_t b) {
      return columns_.candidate_count(a) < columns_.candidate_count(b);
    });
    for (std::size_t p : unplaced) augment(p);
  }

  // Breadth-first search for a chain of moves that frees a candidate of
  // `start`. Returns whether `start` got placed.
  bool augment(std::size_t start) {
    struct Via {
      std::size_t reviewer;
      std::size_t from;
    };
    std::vector<std::optional<Via>> via(columns_.num_papers());
    std::vector<char> seen_reviewer(matrix_.num_reviewers(), 0);
    std::vector<char> seen_paper(columns_.num_papers(), 0);
    std::deque<std::size_t> queue{start};
    seen_paper[start] = 1;

    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& c : columns_.column(x)) {
        const std::size_t r = c.reviewer;
        if (seen_reviewer[r]) continue;
        seen_reviewer[r] = 1;
        if (has_room(r)) {
          apply_chain(start, x, r, via);
          return true;
        }
        for (std::size_t q : held_[r]) {
          if (seen_paper[q]) continue;
          seen_paper[q] = 1;
          via[q] = Via{r, x};
          queue.push_back(q);
        }
      }
    }
    return false;
  }

  template <typename ViaTable>
  void apply_chain(std::size_t start, std::size_t last, std::size_t free_reviewer,
                   const ViaTable& via) {
    std::size_t target = free_reviewer;
    std::size_t cur = last;
    while (cur != start) {
      const auto& step = *via[cur];
      auto& old = held_[step.reviewer];
      old.erase(std::find(old.begin(), old.end(), cur));
      held_[target].push_back(cur);
      holder_[cur] = target;
      target = step.reviewer;
      cur = step.from;
    }
    held_[target].push_back(start);
    holder_[start] = target;
  }

  const SimilarityMatrix& matrix_;
  const SortedColumns& columns_;
  std::span<const int> remaining_;
  std::vector<std::size_t> next_;
  std::vector<std::optional<std::size_t>> holder_;
  std::vector<std::vector<std::size_t>> held_;
};

}  // namespace

AssignmentOutcome assign_heuristic(const SimilarityMatrix& matrix, int reviewers_per_paper,
                                   std::span<const int> capacities) {
  if (reviewers_per_paper < 1) {
    throw std::invalid_argument("reviewers per paper must be at least 1");
  }
  if (capacities.size() != matrix.num_reviewers()) {
    throw std::invalid_argument("one capacity per reviewer expected");
  }

  std::vector<int> remaining(capacities.begin(), capacities.end());
  std::set<std::pair<std::size_t, std::size_t>> assigned;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  int rounds = 0;
  for (int round = 0; round < reviewers_per_paper; ++round) {
    const SortedColumns columns(matrix, remaining, assigned);
    const auto placement = Round(matrix, columns, remaining).run();
    ++rounds;

    bool progress = false;
    for (std::size_t p = 0; p < placement.size(); ++p) {
      if (!placement[p]) continue;
      const std::size_t r = *placement[p];
      pairs.emplace_back(r, p);
      assigned.emplace(r, p);
      --remaining[r];
      progress = true;
    }
    if (!progress) break;
  }
  return make_outcome(matrix, reviewers_per_paper, std::move(pairs), "heuristic", rounds);
}

}  // namespace revassign
