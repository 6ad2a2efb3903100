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

#include "doctest.h"
#include "revassign/assign.hpp"
#include "test_support.hpp"

namespace revassign {
namespace {

constexpr double kTol = 1e-9;

using testing::numbered;

// Every injective paper -> reviewer map over non-zero cells, m = 1,
// capacities 1. Independent of the library's branch-and-bound search.
double permutation_optimum(const SimilarityMatrix& m) {
  std::vector<std::size_t> perm(m.num_reviewers());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double w = 0.0;
    for (std::size_t p = 0; p < std::min(m.num_papers(), perm.size()); ++p) w += m.at(perm[p], p);
    best = std::max(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Papers that received at least one reviewer.
std::size_t reviewed_papers(const AssignmentOutcome& o) {
  std::set<PaperId> seen;
  for (const auto& pr : o.assignment.pairs) seen.insert(pr.paper);
  return seen.size();
}

void require_valid(const AssignmentOutcome& o, const SimilarityMatrix& m, int k,
                   std::span<const int> caps) {
  const auto problems = check_assignment(o.assignment, m, k, caps);
  INFO(o.algorithm << ": " << (problems.empty() ? "" : problems.front()));
  REQUIRE(problems.empty());
  REQUIRE(std::abs(o.total_weight - weight_of_matching(o.assignment)) < kTol);
  std::map<PaperId, int> load;
  for (const auto& pr : o.assignment.pairs) ++load[pr.paper];
  std::map<PaperId, int> shortfall;
  for (const auto& u : o.uncovered) shortfall[u.paper] = u.shortfall;
  for (const auto& p : m.paper_ids()) {
    const int missing = k - load[p];
    REQUIRE(shortfall.count(p) == (missing > 0 ? 1u : 0u));
    if (missing > 0) REQUIRE(shortfall[p] == missing);
  }
}

TEST_CASE("sorted columns of the five-by-five example") {
  const auto m = testing::load_matrix("sample_matrix.tsv");
  const SortedColumns cols(m);
  CHECK(format_sorted_columns(cols, m) == testing::slurp(testing::data_path("sample_sorted_columns.txt")));
  CHECK(cols.candidate_count(3) == 3);
}

TEST_CASE("sorted columns skip exhausted reviewers and excluded pairs") {
  const auto m = testing::load_matrix("sample_matrix.tsv");
  const std::vector<int> remaining{0, 1, 1, 1, 1};
  const SortedColumns cols(m, remaining, {{4, 0}});
  REQUIRE(cols.candidate_count(0) == 3);
  CHECK(cols.column(0)[0].reviewer == 1);
  CHECK(cols.candidate_count(4) == 2);
}

TEST_CASE("hungarian reaches the permutation optimum on the five-by-five example") {
  const auto m = testing::load_matrix("sample_matrix.tsv");
  const std::vector<int> caps(5, 1);
  const double optimum = permutation_optimum(m);
  const auto h = assign_hungarian(m, 1, caps);
  const auto bf = brute_force_optimal(m, 1, caps);
  CHECK(std::abs(h.total_weight - optimum) < kTol);
  CHECK(std::abs(bf.total_weight - optimum) < kTol);
  require_valid(h, m, 1, caps);

  const auto pass = hungarian_pass(m, caps);
  double w = 0.0;
  for (std::size_t p = 0; p < pass.size(); ++p) {
    if (pass[p]) w += m.at(*pass[p], p);
  }
  CHECK(std::abs(w - optimum) < kTol);
}

TEST_CASE("greedy strands a paper that hungarian and the heuristic cover") {
  const auto m = testing::load_matrix("greedy_failure_matrix.tsv");
  const std::vector<int> caps{1, 1};
  const auto g = assign_greedy(m, 1, caps);
  const auto h = assign_hungarian(m, 1, caps);
  const auto x = assign_heuristic(m, 1, caps);
  CHECK(g.covered_papers(2) == 1);
  CHECK(g.uncovered == std::vector<UncoveredPaper>{{"p2", 1}});
  CHECK(g.total_weight == doctest::Approx(0.9));
  CHECK(h.covered_papers(2) == 2);
  CHECK(x.covered_papers(2) == 2);
  CHECK(std::abs(h.total_weight - 1.5) < kTol);
  CHECK(std::abs(x.total_weight - 1.5) < kTol);
  // Processing p2 first avoids the trap.
  const std::vector<std::size_t> order{1, 0};
  CHECK(assign_greedy(m, 1, caps, order).covered_papers(2) == 2);
}

TEST_CASE("trivial instances") {
  const std::vector<int> one{1};
  SimilarityMatrix single({"r1"}, {"p1"}, {0.7});
  for (const auto& o : {assign_hungarian(single, 1, one), assign_greedy(single, 1, one),
                        assign_heuristic(single, 1, one), brute_force_optimal(single, 1, one)}) {
    CHECK(o.assignment.pairs == std::vector<AssignmentPair>{{"p1", "r1", 0.7}});
  }
  SimilarityMatrix zero(numbered('r', 2), numbered('p', 3));
  const std::vector<int> two{2, 2};
  for (const auto& o : {assign_hungarian(zero, 1, two), assign_greedy(zero, 1, two),
                        assign_heuristic(zero, 1, two), assign_hungarian_multipass(zero, 1, two)}) {
    CHECK(o.assignment.pairs.empty());
    CHECK(o.uncovered.size() == 3);
  }
  // Two papers, one competent reviewer with room for one.
  SimilarityMatrix shared({"r1", "r2"}, {"p1", "p2"}, {0.5, 0.6, 0.0, 0.0});
  CHECK(assign_hungarian(shared, 1, std::vector<int>{1, 1}).uncovered.size() == 1);
}

TEST_CASE("bad arguments are rejected") {
  SimilarityMatrix m({"r1"}, {"p1"}, {0.7});
  const std::vector<int> caps{1};
  CHECK_THROWS_AS(assign_hungarian(m, 0, caps), std::invalid_argument);
  CHECK_THROWS_AS(assign_heuristic(m, 1, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(assign_greedy(m, 1, caps, std::vector<std::size_t>{1}), std::invalid_argument);
  const auto big = SimilarityMatrix(numbered('r', 9), numbered('p', 2));
  CHECK_THROWS_AS(brute_force_optimal(big, 1, std::vector<int>(9, 1)), std::invalid_argument);
}

TEST_CASE("multi-pass matching can fall short of the optimum") {
  SimilarityMatrix m({"r1", "r2"}, {"p1", "p2"}, {1.0, 0.9, 0.5, 0.0});
  const std::vector<int> caps{1, 1};
  CHECK(assign_hungarian_multipass(m, 2, caps).total_weight == doctest::Approx(1.4));
  CHECK(assign_hungarian(m, 2, caps).total_weight == doctest::Approx(1.5));
  CHECK(brute_force_optimal(m, 2, caps).total_weight == doctest::Approx(1.5));
}

TEST_CASE("m = 2 with enough capacity covers every paper twice") {
  std::mt19937_64 rng(4001);
  for (int n = 0; n < 50; ++n) {
    const auto m = testing::random_matrix(rng, 6, 3, 0.0);
    const std::vector<int> caps(6, 1);
    const auto h = assign_hungarian(m, 2, caps);
    CHECK(h.uncovered.empty());
    CHECK(h.assignment.pairs.size() == 6);
  }
}

// ---------------------------------------------------------------- properties

TEST_CASE("hungarian matches the brute-force oracle on small instances") {
  std::mt19937_64 rng(4002);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t np = 1 + rng() % 5, nr = 1 + rng() % 5;
    const int k = 1 + int(rng() % 2);
    const auto m = testing::random_matrix(rng, nr, np, 0.3);
    const auto caps = testing::random_capacities(rng, nr, 3);
    const double opt = brute_force_optimal(m, k, caps).total_weight;
    REQUIRE(std::abs(assign_hungarian(m, k, caps).total_weight - opt) < kTol);
    if (k == 1) {
      const auto pass = hungarian_pass(m, caps);
      double w = 0.0;
      for (std::size_t p = 0; p < pass.size(); ++p) {
        if (pass[p]) w += m.at(*pass[p], p);
      }
      REQUIRE(std::abs(w - opt) < kTol);
    }
  }
}

TEST_CASE("every algorithm respects capacity, m and non-zero weights") {
  std::mt19937_64 rng(4003);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t np = 1 + rng() % 12, nr = 1 + rng() % 8;
    const int k = 1 + int(rng() % 3);
    const auto m = testing::random_matrix(rng, nr, np, 0.5);
    const auto caps = testing::random_capacities(rng, nr, 4);
    const auto h = assign_hungarian(m, k, caps);
    const auto mp = assign_hungarian_multipass(m, k, caps);
    const auto g = assign_greedy(m, k, caps);
    const auto x = assign_heuristic(m, k, caps);
    for (const auto* o : {&h, &mp, &g, &x}) require_valid(*o, m, k, caps);
    REQUIRE(h.total_weight >= g.total_weight - kTol);
    REQUIRE(h.total_weight >= x.total_weight - kTol);
    REQUIRE(h.total_weight >= mp.total_weight - kTol);
  }
}

TEST_CASE("the heuristic covers at least as many papers as greedy") {
  std::mt19937_64 rng(4004);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t np = 1 + rng() % 15, nr = 1 + rng() % 10;
    const int k = 1 + int(rng() % 2);
    const auto m = testing::random_matrix(rng, nr, np, 0.6);
    const auto caps = testing::random_capacities(rng, nr, 3);
    const auto g = assign_greedy(m, k, caps);
    const auto x = assign_heuristic(m, k, caps);
    REQUIRE(reviewed_papers(x) >= reviewed_papers(g));
    if (k == 1) REQUIRE(x.covered_papers(np) >= g.covered_papers(np));
  }
}

TEST_CASE("the heuristic places a paper whenever any competent reviewer is free") {
  // With m = 1 and every paper able to get a reviewer at the same time, the
  // heuristic must leave no paper uncovered that hungarian covers.
  std::mt19937_64 rng(4005);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t np = 1 + rng() % 10, nr = 1 + rng() % 10;
    const auto m = testing::random_matrix(rng, nr, np, 0.7);
    const auto caps = testing::random_capacities(rng, nr, 2);
    const auto h = assign_hungarian(m, 1, caps);
    const auto x = assign_heuristic(m, 1, caps);
    REQUIRE(x.covered_papers(np) >= h.covered_papers(np));
  }
}

TEST_CASE("identical inputs give identical outcomes") {
  std::mt19937_64 rng(4006);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t np = 1 + rng() % 10, nr = 1 + rng() % 8;
    const int k = 1 + int(rng() % 2);
    // Coarse weights so ties are common.
    auto m = testing::random_matrix(rng, nr, np, 0.4);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t p = 0; p < np; ++p) m.set(r, p, std::round(m.at(r, p) * 4) / 4);
    }
    const auto caps = testing::random_capacities(rng, nr, 3);
    const SimilarityMatrix copy = m;
    REQUIRE(assign_hungarian(m, k, caps).assignment == assign_hungarian(copy, k, caps).assignment);
    REQUIRE(assign_greedy(m, k, caps).assignment == assign_greedy(copy, k, caps).assignment);
    REQUIRE(assign_heuristic(m, k, caps).assignment == assign_heuristic(copy, k, caps).assignment);
    REQUIRE(assign_hungarian_multipass(m, k, caps).assignment ==
            assign_hungarian_multipass(copy, k, caps).assignment);
  }
}

}  // namespace
}  // namespace revassign
