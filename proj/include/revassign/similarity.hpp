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

// Similarity factors (edge weights) between a paper and a reviewer, computed
// from topic selections, bids or both. Every measure returns a value in
// [0, 1]; an empty selection matches nothing and yields 0.

#ifndef REVASSIGN_SIMILARITY_HPP_
#define REVASSIGN_SIMILARITY_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "revassign/bids.hpp"
#include "revassign/core.hpp"

namespace revassign {

enum class TopicMeasure {
  kJaccard,
  kDice,
  kWeightedRelative,
  kWeightedAbsolute,
  kEasyChairCoarse,
};

std::string_view to_string(TopicMeasure measure);
std::optional<TopicMeasure> parse_topic_measure(std::string_view text);

// Bids only; cells without a bid get the Neutral weight.
struct BidOnly {
  BidScale scale;
};

// A bid (explicit or predicted) decides the cell; otherwise the topic
// measure does.
struct Combined {
  TopicMeasure topic_measure = TopicMeasure::kJaccard;
  BidScale scale;
};

// Cells copied by id from an existing matrix (fixtures, external scores).
// Cells the source does not cover are 0.
struct Injected {
  SimilarityMatrix source;
};

using SimilarityMethod = std::variant<TopicMeasure, BidOnly, Combined, Injected>;

bool uses_bids(const SimilarityMethod& method);

// |P ∩ R| / |P ∪ R| over the selected topics; weights are ignored.
double jaccard(const TopicSelection& paper, const TopicSelection& reviewer);

// 2|P ∩ R| / (|P| + |R|); weights are ignored.
double dice(const TopicSelection& paper, const TopicSelection& reviewer);

// Jaccard with each common topic scored by how well the reviewer's level
// covers the paper's: 1 when w_r >= w_p, else 1 - (w_p - w_r).
double weighted_relative(const TopicSelection& paper, const TopicSelection& reviewer);

// As weighted_relative but each common topic scores
// w_r * (1 - (w_p - w_r)), clamped to [0, 1].
double weighted_absolute(const TopicSelection& paper, const TopicSelection& reviewer);

// Counts common topics only: two or more -> 1, one -> 0.5, none -> 0.
double easychair_coarse(const TopicSelection& paper, const TopicSelection& reviewer);

double topic_similarity(TopicMeasure measure, const TopicSelection& paper,
                        const TopicSelection& reviewer);

// A missing bid counts as Neutral.
double bid_weight(std::optional<BidLevel> level, const BidScale& scale = BidScale{});

double combined_weight(std::optional<BidLevel> bid, const TopicSelection& paper,
                       const TopicSelection& reviewer, TopicMeasure topic_measure,
                       const BidScale& scale = BidScale{});

// One row per reviewer, one column per paper, in descriptor order. Conflict
// cells are forced to 0. Throws ConfigError when the method needs bids and
// `ratings` is null.
SimilarityMatrix build_similarity_matrix(std::span<const PaperDescriptor> papers,
                                         std::span<const ReviewerDescriptor> reviewers,
                                         const SimilarityMethod& method,
                                         const RatingTable* ratings = nullptr);

SimilarityMatrix build_similarity_matrix(const Dataset& dataset,
                                         const SimilarityMethod& method,
                                         const RatingTable* ratings = nullptr);

}  // namespace revassign

#endif  // REVASSIGN_SIMILARITY_HPP_
