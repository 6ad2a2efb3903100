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

#include <cmath>

#include "doctest.h"
#include "revassign/cli.hpp"
#include "revassign/ratings.hpp"
#include "revassign/similarity.hpp"
#include "test_support.hpp"

namespace revassign {
namespace {

using L = BidLevel;

Dataset grid_dataset(std::size_t papers, std::size_t reviewers) {
  Dataset d;
  d.vocabulary = TopicVocabulary({"t0", "t1", "t2"});
  for (std::size_t p = 0; p < papers; ++p) {
    d.papers.push_back({"p" + std::to_string(p + 1), TopicSelection::binary({TopicId(p % 3)})});
  }
  for (std::size_t r = 0; r < reviewers; ++r) {
    d.reviewers.push_back({"r" + std::to_string(r + 1), TopicSelection::binary({0, 1, 2}), 5, {}});
  }
  return d;
}

// k-NN written out longhand: similarity of every other rater, keep positive
// ones, top n by (similarity desc, id asc), weighted mean of levels.
std::optional<Prediction> oracle_predict(const RatingTable& t, const ReviewerId& who,
                                         const PaperId& paper, std::size_t n) {
  std::map<ReviewerId, std::map<PaperId, int>> rows;
  for (const auto& [k, v] : t.entries()) {
    if (v.provenance == Provenance::kExplicit) rows[k.first][k.second] = to_int(v.level);
  }
  std::vector<std::pair<double, ReviewerId>> sims;
  for (const auto& [other, row] : rows) {
    if (other == who || !row.count(paper)) continue;
    std::vector<double> xs, ys;
    for (const auto& [p, lv] : rows[who]) {
      if (row.count(p)) {
        xs.push_back(lv);
        ys.push_back(row.at(p));
      }
    }
    if (xs.empty()) continue;
    const double k = double(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i] / k, my += ys[i] / k;
    double sxy = 0, sxx = 0, syy = 0, gap = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
      syy += (ys[i] - my) * (ys[i] - my);
      gap += std::abs(xs[i] - ys[i]);
    }
    const double s = (xs.size() >= 2 && sxx > 0 && syy > 0) ? sxy / std::sqrt(sxx * syy)
                                                            : 1.0 - gap / (4.0 * k);
    if (s > 1e-12) sims.emplace_back(s, other);
  }
  if (sims.empty()) return std::nullopt;
  std::sort(sims.begin(), sims.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  if (sims.size() > n) sims.resize(n);
  double mass = 0, acc = 0;
  for (const auto& [s, id] : sims) {
    mass += s;
    acc += s * rows[id][paper];
  }
  return Prediction{round_level(acc / mass), std::min(1.0, mass / double(n))};
}

TEST_CASE("rating table keeps explicit entries over predictions") {
  RatingTable t;
  t.set_explicit("r1", "p1", L::kCanReview);
  CHECK_FALSE(t.set_predicted("r1", "p1", L::kPreferNot, 0.5));
  CHECK(t.find("r1", "p1")->level == L::kCanReview);
  CHECK(t.set_predicted("r2", "p1", L::kPreferNot, 0.5));
  CHECK_THROWS(t.set_predicted("r3", "p1", L::kPreferNot, 1.5));
  CHECK(t.explicit_count() == 1);
  CHECK(t.predicted_count() == 1);
  t.set_explicit("r2", "p1", L::kWantToReview);
  CHECK(t.explicit_count() == 2);
  CHECK(t.predicted_count() == 0);
  t.clear_predictions();
  CHECK(t.size() == 2);
}

TEST_CASE("bid level names and integers round-trip") {
  for (int v = 0; v < kNumBidLevels; ++v) {
    const auto level = bid_level_from_int(v);
    CHECK(to_int(level) == v);
    CHECK(parse_bid_level(to_string(level)) == level);
  }
  CHECK_THROWS(bid_level_from_int(5));
  CHECK_FALSE(parse_bid_level("maybe").has_value());
}

TEST_CASE("pearson similarity between reviewers") {
  RatingTable t;
  for (auto [p, a, b, c] : {std::tuple{"p1", L::kWantToReview, L::kWantToReview, L::kCannotOrConflict},
                            std::tuple{"p2", L::kNeutral, L::kNeutral, L::kNeutral},
                            std::tuple{"p3", L::kPreferNot, L::kPreferNot, L::kCanReview}}) {
    t.set_explicit("a", p, a);
    t.set_explicit("b", p, b);
    t.set_explicit("c", p, c);
  }
  t.set_explicit("d", "p1", L::kCanReview);
  CHECK(*reviewer_similarity(t, "a", "b") == doctest::Approx(1.0));
  CHECK(*reviewer_similarity(t, "a", "c") == doctest::Approx(-1.0));
  CHECK_FALSE(reviewer_similarity(t, "a", "d").has_value());
  t.set_explicit("e", "p1", L::kCanReview);
  t.set_explicit("e", "p2", L::kCanReview);
  CHECK_FALSE(reviewer_similarity(t, "a", "e").has_value());
}

TEST_CASE("prediction rounds to the nearest level, halves toward neutral") {
  CHECK(round_level(3.4) == L::kCanReview);
  CHECK(round_level(3.6) == L::kWantToReview);
  CHECK(round_level(3.5) == L::kCanReview);
  CHECK(round_level(2.5) == L::kNeutral);
  CHECK(round_level(1.5) == L::kNeutral);
  CHECK(round_level(0.5) == L::kPreferNot);
  CHECK(round_level(-1.0) == L::kCannotOrConflict);
}

TEST_CASE("two reviewers who both want the same paper share interests") {
  RatingTable t;
  t.set_explicit("r1", "p1", L::kWantToReview);
  t.set_explicit("r3", "p1", L::kWantToReview);
  t.set_explicit("r1", "p2", L::kWantToReview);
  const auto p = predict_rating(t, "r3", "p2", 5);
  REQUIRE(p.has_value());
  CHECK(p->level == L::kWantToReview);
  // One neighbour of agreement 1 out of a neighbourhood of 5.
  CHECK(p->confidence == doctest::Approx(0.2));
}

TEST_CASE("no neighbour rated the paper, no prediction") {
  RatingTable t;
  t.set_explicit("r1", "p1", L::kWantToReview);
  t.set_explicit("r2", "p1", L::kWantToReview);
  CHECK_FALSE(predict_rating(t, "r2", "p9", 5).has_value());
}

TEST_CASE("single perfectly correlated neighbour passes its level through") {
  RatingTable t;
  t.set_explicit("a", "p1", L::kWantToReview);
  t.set_explicit("a", "p2", L::kPreferNot);
  t.set_explicit("b", "p1", L::kWantToReview);
  t.set_explicit("b", "p2", L::kPreferNot);
  t.set_explicit("b", "p3", L::kCanReview);
  const auto p = predict_rating(t, "a", "p3", 1);
  REQUIRE(p.has_value());
  CHECK(p->level == L::kCanReview);
  CHECK(p->confidence == doctest::Approx(1.0));
}

TEST_CASE("predictions match the longhand k-NN on random tables") {
  std::mt19937_64 rng(3001);
  for (int n = 0; n < 1000; ++n) {
    RatingTable t;
    const int reviewers = 2 + int(rng() % 6), papers = 2 + int(rng() % 6);
    for (int r = 0; r < reviewers; ++r) {
      for (int p = 0; p < papers; ++p) {
        if (rng() % 2) {
          t.set_explicit("r" + std::to_string(r), "p" + std::to_string(p),
                         bid_level_from_int(int(rng() % 5)));
        }
      }
    }
    const std::size_t k = 1 + rng() % 4;
    for (int r = 0; r < reviewers; ++r) {
      for (int p = 0; p < papers; ++p) {
        const auto rid = "r" + std::to_string(r), pid = "p" + std::to_string(p);
        if (t.has_explicit(rid, pid)) continue;
        const auto got = predict_rating(t, rid, pid, k);
        const auto want = oracle_predict(t, rid, pid, k);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
          REQUIRE(got->level == want->level);
          REQUIRE(got->confidence == doctest::Approx(want->confidence));
          REQUIRE(got->confidence >= 0.0);
          REQUIRE(got->confidence <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("initial samples follow topic similarity") {
  Dataset d;
  d.vocabulary = TopicVocabulary({"a", "b", "c", "d"});
  d.papers = {{"p1", TopicSelection::binary({0})},
              {"p2", TopicSelection::binary({0, 1})},
              {"p3", TopicSelection::binary({3})},
              {"p4", TopicSelection::binary({1})},
              {"p5", TopicSelection::binary({0, 1, 2})}};
  d.reviewers = {{"r1", TopicSelection::binary({0, 1}), 3, {"p5"}},
                 {"r2", TopicSelection::binary({2}), 3, {}},
                 {"r3", TopicSelection::binary({3}), 3, {"p3"}}};

  SUBCASE("shorter than k when few papers overlap, conflicts excluded") {
    const auto s = initial_samples(d, 20);
    CHECK(s.at("r1") == std::vector<PaperId>{"p2", "p1", "p4"});
    CHECK(s.at("r2") == std::vector<PaperId>{"p5"});
    CHECK(s.at("r3").empty());
  }
  SUBCASE("cut at k") {
    CHECK(initial_samples(d, 2).at("r1") == std::vector<PaperId>{"p2", "p1"});
  }
  SUBCASE("equal similarity: the less rated paper first") {
    RatingTable t;
    t.set_explicit("r2", "p1", L::kNeutral);
    t.set_explicit("r3", "p1", L::kNeutral);
    CHECK(initial_samples(d, 20, t).at("r1") == std::vector<PaperId>{"p2", "p4", "p1"});
  }
}

TEST_CASE("later samples prefer high predicted levels, then low confidence") {
  auto d = grid_dataset(4, 2);
  RatingTable t;
  t.set_predicted("r1", "p1", L::kCanReview, 0.8);
  t.set_predicted("r1", "p2", L::kWantToReview, 0.9);
  t.set_predicted("r1", "p3", L::kCanReview, 0.2);
  t.set_explicit("r2", "p1", L::kNeutral);
  const auto s = select_samples(d, t, 10);
  CHECK(s.at("r1") == std::vector<PaperId>{"p2", "p3", "p1", "p4"});
  CHECK(s.at("r2") == std::vector<PaperId>{"p2", "p3", "p4"});
}

TEST_CASE("a silent bid source only advances the counter") {
  const auto d = grid_dataset(3, 2);
  RatingTable t;
  t.set_explicit("r1", "p1", L::kWantToReview);
  auto state = start_irm(d, 5, t);
  const BidSource silent = [](const ReviewerId&, std::span<const PaperId>) {
    return std::vector<std::pair<PaperId, BidLevel>>{};
  };
  state = irm_iteration(d, std::move(state), 5, 5, silent);
  CHECK(state.iteration == 1);
  CHECK(state.table.explicit_count() == 1);
  CHECK(state.anomalies.empty());
}

TEST_CASE("bids on conflicted or unknown papers are logged, not stored") {
  auto d = grid_dataset(2, 1);
  d.reviewers[0].conflicts.insert("p2");
  auto state = start_irm(d, 5);
  const BidSource rogue = [](const ReviewerId&, std::span<const PaperId>) {
    return std::vector<std::pair<PaperId, BidLevel>>{{"p1", L::kCanReview},
                                                     {"p2", L::kWantToReview},
                                                     {"p7", L::kWantToReview}};
  };
  state = irm_iteration(d, std::move(state), 5, 5, rogue);
  CHECK(state.table.explicit_count() == 1);
  CHECK(state.anomalies.size() == 2);
}

TEST_CASE("a paper nobody rated and nobody shares topics with stays unpredicted") {
  auto d = grid_dataset(3, 3);
  d.vocabulary = TopicVocabulary({"t0", "t1", "t2", "lonely"});
  d.papers.push_back({"p4", TopicSelection::binary({3})});
  std::map<ReviewerId, TopicSelection> truth;
  for (const auto& r : d.reviewers) truth[r.id] = r.topics;
  auto state = start_irm(d, 10);
  const auto bidder = simulate_bidder(d, truth, 0.0, 5);
  for (int i = 0; i < 3; ++i) state = irm_iteration(d, std::move(state), 10, 5, bidder);
  for (const auto& r : d.reviewers) CHECK_FALSE(state.table.find(r.id, "p4").has_value());
}

TEST_CASE("noiseless bidder reproduces quantised topic similarity") {
  const auto d = testing::load_dataset("weighted_example.tsv");
  std::map<ReviewerId, TopicSelection> truth;
  for (const auto& r : d.reviewers) truth[r.id] = r.topics;
  const auto bidder = simulate_bidder(d, truth, 0.0, 1);
  const std::vector<PaperId> sample{"p1"};
  // 0.4 * 4 = 1.6 and 0.36 * 4 = 1.44.
  CHECK(bidder("r1", sample).at(0).second == L::kNeutral);
  CHECK(bidder("r2", sample).at(0).second == L::kPreferNot);
  CHECK(bidder("nobody", sample).empty());
}

TEST_CASE("same seed, same bids; different seed, different bids") {
  const auto data = cli::generate_dataset({.seed = 9, .papers = 40, .reviewers = 10});
  const auto a = simulate_bidder(data.dataset, data.truth, 0.5, 77);
  const auto b = simulate_bidder(data.dataset, data.truth, 0.5, 77);
  const auto c = simulate_bidder(data.dataset, data.truth, 0.5, 78);
  std::vector<PaperId> all;
  for (const auto& p : data.dataset.papers) all.push_back(p.id);
  bool differs = false;
  for (const auto& r : data.dataset.reviewers) {
    CHECK(a(r.id, all) == b(r.id, all));
    differs = differs || a(r.id, all) != c(r.id, all);
  }
  CHECK(differs);
}

TEST_CASE("full noise gives uniformly distributed levels") {
  const auto data = cli::generate_dataset({.seed = 3, .papers = 500, .reviewers = 20});
  const auto bidder = simulate_bidder(data.dataset, data.truth, 1.0, 11);
  std::vector<PaperId> all;
  for (const auto& p : data.dataset.papers) all.push_back(p.id);
  std::array<double, kNumBidLevels> counts{};
  double total = 0;
  for (const auto& r : data.dataset.reviewers) {
    for (const auto& [p, level] : bidder(r.id, all)) {
      counts[to_int(level)] += 1;
      total += 1;
    }
  }
  REQUIRE(total == 10000);
  double chi2 = 0;
  for (double c : counts) chi2 += (c - total / 5) * (c - total / 5) / (total / 5);
  // 99.9th percentile of chi-square with 4 degrees of freedom.
  CHECK(chi2 < 18.467);
}

TEST_CASE("harness: explicit ratings grow and confidence never drops") {
  const auto data = cli::generate_dataset(
      {.seed = 21, .papers = 60, .reviewers = 25, .topics = 10, .density = 0.3});
  const auto bidder = simulate_bidder(data.dataset, data.truth, 0.1, 21);
  auto state = start_irm(data.dataset, 5);
  std::size_t explicit_before = 0;
  RatingTable previous;
  for (int it = 0; it < 4 && !state.samples_empty(); ++it) {
    state = irm_iteration(data.dataset, std::move(state), 5, 5, bidder);
    CHECK(state.table.explicit_count() > explicit_before);
    explicit_before = state.table.explicit_count();
    for (const auto& [key, rating] : state.table.entries()) {
      REQUIRE(rating.confidence >= 0.0);
      REQUIRE(rating.confidence <= 1.0);
      // Explicit entries are never touched again.
      const auto before = previous.find(key.first, key.second);
      if (before && before->provenance == Provenance::kExplicit) {
        REQUIRE(rating.provenance == Provenance::kExplicit);
        REQUIRE(rating.level == before->level);
      }
    }
    previous = state.table;
  }
  // The samples never propose an already rated or conflicted paper.
  for (const auto& [reviewer, papers] : state.pending) {
    const auto& rd = data.dataset.reviewers[*data.dataset.reviewer_index(reviewer)];
    for (const auto& p : papers) {
      CHECK_FALSE(state.table.has_explicit(reviewer, p));
      CHECK(rd.conflicts.count(p) == 0);
    }
  }
}

}  // namespace
}  // namespace revassign
