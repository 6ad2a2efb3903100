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

// Iterative rating: reviewers bid on small samples of papers, missing bids
// are predicted by user-based collaborative filtering, and the next samples
// are chosen from the predictions. Repeat.
//
// The collaborative filter is a Pearson k-nearest-neighbour model over the
// integer bid levels (0..4). Only explicit bids feed the correlations;
// predictions are recomputed from scratch after every round of bidding.

#ifndef REVASSIGN_RATINGS_HPP_
#define REVASSIGN_RATINGS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revassign/bids.hpp"
#include "revassign/core.hpp"

namespace revassign {

inline constexpr std::size_t kDefaultSampleSize = 20;
inline constexpr std::size_t kDefaultNeighborhood = 5;

// Reviewer id -> papers proposed for rating, best first.
using Samples = std::map<ReviewerId, std::vector<PaperId>>;

// Given a reviewer and the papers proposed to them, returns the bids the
// reviewer placed. Papers may be skipped.
using BidSource = std::function<std::vector<std::pair<PaperId, BidLevel>>(
    const ReviewerId&, std::span<const PaperId>)>;

struct Prediction {
  BidLevel level = BidLevel::kNeutral;
  double confidence = 0.0;
};

// Top-k papers per reviewer by Jaccard topic similarity. Zero-similarity,
// conflicted and already explicitly rated papers are never proposed. Ties go
// to the paper with fewer explicit ratings, then to dataset order.
Samples initial_samples(const Dataset& dataset, std::size_t k,
                        const RatingTable& ratings = RatingTable{});

// Pearson correlation of the two reviewers' explicit levels over co-rated
// papers. Undefined below two co-rated papers or with zero variance.
std::optional<double> reviewer_similarity(const RatingTable& table, const ReviewerId& a,
                                          const ReviewerId& b);

// Weight given to a neighbour: the Pearson correlation when defined,
// otherwise mean agreement 1 - mean|level difference| / 4 over at least one
// co-rated paper.
std::optional<double> neighbor_similarity(const RatingTable& table, const ReviewerId& a,
                                          const ReviewerId& b);

// Rounds a fractional level to the nearest level; exact halves go toward
// Neutral.
BidLevel round_level(double value);

// Similarity-weighted mean level of the (up to n) most similar reviewers with
// positive similarity who explicitly rated the paper. Confidence is the
// contributors' similarity mass divided by n, capped at 1. Nothing when no
// such neighbour exists.
std::optional<Prediction> predict_rating(const RatingTable& table,
                                         const ReviewerId& reviewer, const PaperId& paper,
                                         std::size_t n = kDefaultNeighborhood);

// Drops all predictions and predicts every non-conflicted cell of the
// dataset that has no explicit bid.
void recompute_predictions(const Dataset& dataset, RatingTable& table,
                           std::size_t n = kDefaultNeighborhood);

struct IrmState {
  RatingTable table;
  int iteration = 0;
  // Papers to propose at the next iteration.
  Samples pending;
  std::vector<std::string> anomalies;

  bool samples_empty() const;
};

// Samples for the next round: unrated papers with a prediction first
// (higher predicted level, then lower confidence), then papers without a
// prediction by Jaccard similarity as in initial_samples.
Samples select_samples(const Dataset& dataset, const RatingTable& table, std::size_t k);

// State before the first round; `pending` holds initial_samples.
IrmState start_irm(const Dataset& dataset, std::size_t k,
                   RatingTable table = RatingTable{});

// One round: propose `state.pending`, record the bids as explicit, recompute
// predictions and choose the next samples. Bids on conflicted or unknown
// pairs are dropped and logged in `anomalies`.
IrmState irm_iteration(const Dataset& dataset, IrmState state, std::size_t k,
                       std::size_t n, const BidSource& bid_source);

// Noise-free level a reviewer with the given hidden expertise would bid:
// weighted_relative similarity scaled to 0..4 and rounded.
BidLevel truth_level(const TopicSelection& paper, const TopicSelection& hidden_truth);

// Simulated reviewers. Each bid is truth_level(); with probability
// min(noise, 1) it is replaced by a uniformly drawn level. A bid depends only
// on (seed, reviewer, paper), so repeated queries agree. Reviewers missing
// from `hidden_truth` never bid.
BidSource simulate_bidder(const Dataset& dataset,
                          std::map<ReviewerId, TopicSelection> hidden_truth,
                          double noise, std::uint64_t seed);

struct PredictionQuality {
  std::size_t cells = 0;
  // Root mean square level error of the predictions against truth_level.
  double rmse = 0.0;
  // Same cells, everything predicted Neutral.
  double neutral_rmse = 0.0;
};

// Scores every predicted cell of the table.
PredictionQuality evaluate_predictions(const Dataset& dataset, const RatingTable& table,
                                       const std::map<ReviewerId, TopicSelection>& hidden_truth);

}  // namespace revassign

#endif  // REVASSIGN_RATINGS_HPP_
