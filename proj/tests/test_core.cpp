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

#include "doctest.h"
#include "revassign/core.hpp"
#include "test_support.hpp"

namespace revassign {
namespace {

using testing::numbered;

Dataset small_dataset() {
  Dataset d;
  d.vocabulary = TopicVocabulary({"graphs", "databases", "learning"});
  d.papers = {{"p1", TopicSelection::binary({0, 1})}, {"p2", {{2, 0.5}}}};
  d.reviewers = {{"r1", {{0, 0.7}}, 2, {}}, {"r2", TopicSelection::binary({1, 2}), 2, {"p2"}}};
  d.reviewers_per_paper = 2;
  return d;
}

TEST_CASE("vocabulary rejects empty and duplicate labels") {
  CHECK_THROWS_AS(TopicVocabulary({"a", ""}), std::invalid_argument);
  CHECK_THROWS_AS(TopicVocabulary({"a", "b", "a"}), std::invalid_argument);
  TopicVocabulary v({"a", "b"});
  CHECK(v.size() == 2);
  CHECK(v.find("b") == TopicId{1});
  CHECK_FALSE(v.find("c").has_value());
  CHECK_FALSE(v.contains(2));
}

TEST_CASE("zero weight removes a topic from a selection") {
  TopicSelection s{{1, 0.5}, {3, 1.0}};
  CHECK(s.size() == 2);
  s.set(1, 0.0);
  CHECK_FALSE(s.contains(1));
  CHECK(s.weight(1) == 0.0);
  CHECK(s.is_binary());
  CHECK(TopicSelection::binary({4, 2}).weight(2) == 1.0);
}

TEST_CASE("valid dataset passes validation") {
  CHECK(validate_dataset(small_dataset()).ok());
}

TEST_CASE("each kind of violation is reported") {
  SUBCASE("unknown topic") {
    auto d = small_dataset();
    d.papers[0].topics.set(9, 1.0);
    CHECK(validate_dataset(d).has(ViolationKind::kUnknownTopic));
  }
  SUBCASE("weight above one") {
    auto d = small_dataset();
    d.reviewers[0].topics.set(1, 1.5);
    CHECK(validate_dataset(d).has(ViolationKind::kWeightOutOfRange));
  }
  SUBCASE("duplicate ids") {
    auto d = small_dataset();
    d.papers.push_back(d.papers[0]);
    d.reviewers.push_back(d.reviewers[1]);
    const auto report = validate_dataset(d);
    CHECK(report.has(ViolationKind::kDuplicatePaper));
    CHECK(report.has(ViolationKind::kDuplicateReviewer));
  }
  SUBCASE("capacity below one") {
    auto d = small_dataset();
    d.reviewers[0].capacity = 0;
    CHECK(validate_dataset(d).has(ViolationKind::kBadCapacity));
  }
  SUBCASE("conflict with an unknown paper") {
    auto d = small_dataset();
    d.reviewers[0].conflicts.insert("p9");
    CHECK(validate_dataset(d).has(ViolationKind::kUnknownConflictPaper));
  }
  SUBCASE("m below one") {
    auto d = small_dataset();
    d.reviewers_per_paper = 0;
    CHECK(validate_dataset(d).has(ViolationKind::kBadReviewersPerPaper));
  }
  SUBCASE("capacities cannot cover m reviewers for every paper") {
    auto d = small_dataset();
    d.reviewers[0].capacity = 1;
    const auto report = validate_dataset(d);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.has(ViolationKind::kCapacityInfeasible));
    CHECK(report.violations[0].message == "sum of capacities 3 < 4 (m * papers)");
  }
}

TEST_CASE("matrix construction checks shape, range and ids") {
  CHECK_THROWS(SimilarityMatrix({"r1"}, {"p1", "p2"}, {0.5}));
  CHECK_THROWS(SimilarityMatrix({"r1"}, {"p1"}, {1.2}));
  CHECK_THROWS(SimilarityMatrix({"r1"}, {"p1"}, {-0.1}));
  CHECK_THROWS(SimilarityMatrix({"r1", "r1"}, {"p1"}, {0.1, 0.2}));
  SimilarityMatrix m({"r1", "r2"}, {"p1", "p2", "p3"}, {0.1, 0, 0.3, 0.4, 0, 0});
  CHECK(m.at(1, 0) == 0.4);
  CHECK(m.reviewer_index("r2") == std::size_t{1});
  CHECK(m.paper_index("p3") == std::size_t{2});
  CHECK_FALSE(m.paper_index("p4").has_value());
  CHECK(m.candidate_count(0) == 2);
  CHECK(m.candidate_count(1) == 0);
  m.set(0, 1, 0.25);
  CHECK(m.candidate_count(1) == 1);
  CHECK_THROWS(m.set(0, 1, 2.0));
}

TEST_CASE("weight of a matching is the sum of its pair weights") {
  AssignmentSet a{{{"p1", "r1", 0.40}, {"p2", "r5", 0.42}}};
  CHECK(weight_of_matching(a) == doctest::Approx(0.82).epsilon(1e-12));
  CHECK(weight_of_matching(AssignmentSet{}) == 0.0);
}

TEST_CASE("check_assignment flags every broken constraint") {
  SimilarityMatrix m(numbered('r', 2), numbered('p', 2), {0.5, 0.0, 0.3, 0.6});
  const std::vector<int> caps{1, 1};
  CHECK(check_assignment({{{"p1", "r1", 0.5}, {"p2", "r2", 0.6}}}, m, 1, caps).empty());
  CHECK_FALSE(check_assignment({{{"p2", "r1", 0.0}}}, m, 1, caps).empty());
  CHECK_FALSE(check_assignment({{{"p1", "r1", 0.4}}}, m, 1, caps).empty());
  CHECK_FALSE(check_assignment({{{"p1", "r1", 0.5}, {"p1", "r1", 0.5}}}, m, 2, caps).empty());
  CHECK_FALSE(check_assignment({{{"p1", "r2", 0.3}, {"p2", "r2", 0.6}}}, m, 1, caps).empty());
  CHECK_FALSE(check_assignment({{{"p1", "r1", 0.5}, {"p1", "r2", 0.3}}}, m, 1, {{2, 2}}).empty());
  CHECK_FALSE(check_assignment({{{"p7", "r1", 0.5}}}, m, 1, caps).empty());
}

}  // namespace
}  // namespace revassign
