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

#include "revassign/similarity.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace revassign {

namespace {

constexpr std::array<std::pair<TopicMeasure, std::string_view>, 5> kMeasureNames = {{
    {TopicMeasure::kJaccard, "jaccard"},
    {TopicMeasure::kDice, "dice"},
    {TopicMeasure::kWeightedRelative, "weighted-relative"},
    {TopicMeasure::kWeightedAbsolute, "weighted-absolute"},
    {TopicMeasure::kEasyChairCoarse, "easychair"},
}};

// Walks the two sorted selections once and calls `on_common(w_p, w_r)` for
// every shared topic. Returns |intersection|.
template <typename Fn>
std::size_t for_each_common(const TopicSelection& paper, const TopicSelection& reviewer,
                            Fn&& on_common) {
  std::size_t common = 0;
  auto a = paper.entries().begin();
  auto b = reviewer.entries().begin();
  while (a != paper.entries().end() && b != reviewer.entries().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      on_common(a->second, b->second);
      ++common;
      ++a;
      ++b;
    }
  }
  return common;
}

std::size_t intersection_size(const TopicSelection& paper, const TopicSelection& reviewer) {
  return for_each_common(paper, reviewer, [](double, double) {});
}

template <typename Score>
double weighted_jaccard(const TopicSelection& paper, const TopicSelection& reviewer,
                        Score&& score) {
  double sum = 0.0;
  const std::size_t common = for_each_common(
      paper, reviewer, [&](double wp, double wr) { sum += score(wp, wr); });
  const std::size_t uni = paper.size() + reviewer.size() - common;
  if (uni == 0) return 0.0;
  return std::clamp(sum / static_cast<double>(uni), 0.0, 1.0);
}

}  // namespace

std::string_view to_string(TopicMeasure measure) {
  for (const auto& [m, name] : kMeasureNames) {
    if (m == measure) return name;
  }
  return "unknown";
}

std::optional<TopicMeasure> parse_topic_measure(std::string_view text) {
  for (const auto& [m, name] : kMeasureNames) {
    if (name == text) return m;
  }
  return std::nullopt;
}

bool uses_bids(const SimilarityMethod& method) {
  return std::holds_alternative<BidOnly>(method) || std::holds_alternative<Combined>(method);
}

double jaccard(const TopicSelection& paper, const TopicSelection& reviewer) {
  const std::size_t common = intersection_size(paper, reviewer);
  const std::size_t uni = paper.size() + reviewer.size() - common;
  if (uni == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(uni);
}

double dice(const TopicSelection& paper, const TopicSelection& reviewer) {
  const std::size_t total = paper.size() + reviewer.size();
  if (total == 0) return 0.0;
  return 2.0 * static_cast<double>(intersection_size(paper, reviewer)) /
         static_cast<double>(total);
}

double weighted_relative(const TopicSelection& paper, const TopicSelection& reviewer) {
  return weighted_jaccard(paper, reviewer, [](double wp, double wr) {
    return wr >= wp ? 1.0 : 1.0 - (wp - wr);
  });
}

double weighted_absolute(const TopicSelection& paper, const TopicSelection& reviewer) {
  return weighted_jaccard(paper, reviewer, [](double wp, double wr) {
    return std::clamp(wr * (1.0 - (wp - wr)), 0.0, 1.0);
  });
}

double easychair_coarse(const TopicSelection& paper, const TopicSelection& reviewer) {
  const std::size_t common = intersection_size(paper, reviewer);
  if (common >= 2) return 1.0;
  return common == 1 ? 0.5 : 0.0;
}

double topic_similarity(TopicMeasure measure, const TopicSelection& paper,
                        const TopicSelection& reviewer) {
  switch (measure) {
    case TopicMeasure::kJaccard: return jaccard(paper, reviewer);
    case TopicMeasure::kDice: return dice(paper, reviewer);
    case TopicMeasure::kWeightedRelative: return weighted_relative(paper, reviewer);
    case TopicMeasure::kWeightedAbsolute: return weighted_absolute(paper, reviewer);
    case TopicMeasure::kEasyChairCoarse: return easychair_coarse(paper, reviewer);
  }
  return 0.0;
}

double bid_weight(std::optional<BidLevel> level, const BidScale& scale) {
  return scale.weight(level.value_or(BidLevel::kNeutral));
}

double combined_weight(std::optional<BidLevel> bid, const TopicSelection& paper,
                       const TopicSelection& reviewer, TopicMeasure topic_measure,
                       const BidScale& scale) {
  if (bid) return scale.weight(*bid);
  return topic_similarity(topic_measure, paper, reviewer);
}

SimilarityMatrix build_similarity_matrix(std::span<const PaperDescriptor> papers,
                                         std::span<const ReviewerDescriptor> reviewers,
                                         const SimilarityMethod& method,
                                         const RatingTable* ratings) {
  if (uses_bids(method) && ratings == nullptr) {
    throw ConfigError("similarity method needs a rating table but none was supplied");
  }

  std::vector<ReviewerId> reviewer_ids;
  reviewer_ids.reserve(reviewers.size());
  for (const auto& r : reviewers) reviewer_ids.push_back(r.id);
  std::vector<PaperId> paper_ids;
  paper_ids.reserve(papers.size());
  for (const auto& p : papers) paper_ids.push_back(p.id);
  SimilarityMatrix matrix(std::move(reviewer_ids), std::move(paper_ids));

  auto bid_for = [&](const ReviewerDescriptor& r,
                     const PaperDescriptor& p) -> std::optional<BidLevel> {
    auto rating = ratings->find(r.id, p.id);
    if (!rating) return std::nullopt;
    return rating->level;
  };

  for (std::size_t ri = 0; ri < reviewers.size(); ++ri) {
    const auto& r = reviewers[ri];
    for (std::size_t pi = 0; pi < papers.size(); ++pi) {
      const auto& p = papers[pi];
      double w = std::visit(
          [&](const auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, TopicMeasure>) {
              return topic_similarity(m, p.topics, r.topics);
            } else if constexpr (std::is_same_v<M, BidOnly>) {
              return bid_weight(bid_for(r, p), m.scale);
            } else if constexpr (std::is_same_v<M, Combined>) {
              return combined_weight(bid_for(r, p), p.topics, r.topics, m.topic_measure,
                                     m.scale);
            } else {
              auto sr = m.source.reviewer_index(r.id);
              auto sp = m.source.paper_index(p.id);
              return sr && sp ? m.source.at(*sr, *sp) : 0.0;
            }
          },
          method);
      if (r.conflicts.count(p.id) != 0) w = 0.0;
      matrix.set(ri, pi, w);
    }
  }
  return matrix;
}

SimilarityMatrix build_similarity_matrix(const Dataset& dataset,
                                         const SimilarityMethod& method,
                                         const RatingTable* ratings) {
  return build_similarity_matrix(dataset.papers, dataset.reviewers, method, ratings);
}

}  // namespace revassign
