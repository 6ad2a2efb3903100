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

#include "revassign/ratings.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string_view>
#include <unordered_map>

#include "revassign/similarity.hpp"

namespace revassign {

namespace {

// Explicit bids of the table, indexed both ways. Built once per prediction
// sweep so that correlations and neighbour lookups do not rescan the table.
class ExplicitIndex {
 public:
  explicit ExplicitIndex(const RatingTable& table) {
    for (const auto& [key, rating] : table.entries()) {
      if (rating.provenance != Provenance::kExplicit) continue;
      by_reviewer_[key.first].emplace(key.second, to_int(rating.level));
      raters_[key.second].emplace_back(key.first, to_int(rating.level));
    }
  }

  const std::map<PaperId, int>* reviewer(const ReviewerId& id) const {
    auto it = by_reviewer_.find(id);
    return it == by_reviewer_.end() ? nullptr : &it->second;
  }

  std::span<const std::pair<ReviewerId, int>> raters(const PaperId& paper) const {
    auto it = raters_.find(paper);
    if (it == raters_.end()) return {};
    return it->second;
  }

  std::size_t rating_count(const PaperId& paper) const { return raters(paper).size(); }

 private:
  std::unordered_map<ReviewerId, std::map<PaperId, int>> by_reviewer_;
  std::unordered_map<PaperId, std::vector<std::pair<ReviewerId, int>>> raters_;
};

std::vector<std::pair<int, int>> co_ratings(const std::map<PaperId, int>* a,
                                            const std::map<PaperId, int>* b) {
  std::vector<std::pair<int, int>> out;
  if (a == nullptr || b == nullptr) return out;
  auto ia = a->begin();
  auto ib = b->begin();
  while (ia != a->end() && ib != b->end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.emplace_back(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::optional<double> pearson(std::span<const std::pair<int, int>> pairs) {
  if (pairs.size() < 2) return std::nullopt;
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (const auto& [x, y] : pairs) {
    mean_a += x;
    mean_b += y;
  }
  mean_a /= static_cast<double>(pairs.size());
  mean_b /= static_cast<double>(pairs.size());
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (const auto& [x, y] : pairs) {
    cov += (x - mean_a) * (y - mean_b);
    var_a += (x - mean_a) * (x - mean_a);
    var_b += (y - mean_b) * (y - mean_b);
  }
  if (var_a <= 0.0 || var_b <= 0.0) return std::nullopt;
  const double r = cov / std::sqrt(var_a * var_b);
  // Rounding noise must not turn an uncorrelated pair into a neighbour.
  if (std::abs(r) < 1e-12) return 0.0;
  return std::clamp(r, -1.0, 1.0);
}

std::optional<double> neighbor_weight(std::span<const std::pair<int, int>> pairs) {
  if (auto r = pearson(pairs)) return r;
  if (pairs.empty()) return std::nullopt;
  double diff = 0.0;
  for (const auto& [x, y] : pairs) diff += std::abs(x - y);
  return 1.0 - diff / (static_cast<double>(pairs.size()) * (kNumBidLevels - 1));
}

std::optional<Prediction> predict_with(const ExplicitIndex& index,
                                       const ReviewerId& reviewer, const PaperId& paper,
                                       std::size_t n,
                                       std::unordered_map<ReviewerId, std::optional<double>>&
                                           similarity_cache) {
  if (n == 0) return std::nullopt;
  const auto* own = index.reviewer(reviewer);

  struct Neighbor {
    double similarity;
    const ReviewerId* id;
    int level;
  };
  std::vector<Neighbor> neighbors;
  for (const auto& [other, level] : index.raters(paper)) {
    if (other == reviewer) continue;
    auto cached = similarity_cache.find(other);
    if (cached == similarity_cache.end()) {
      cached = similarity_cache
                   .emplace(other, neighbor_weight(co_ratings(own, index.reviewer(other))))
                   .first;
    }
    if (cached->second && *cached->second > 0.0) {
      neighbors.push_back({*cached->second, &other, level});
    }
  }
  if (neighbors.empty()) return std::nullopt;

  std::sort(neighbors.begin(), neighbors.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return *a.id < *b.id;
  });
  if (neighbors.size() > n) neighbors.resize(n);

  double mass = 0.0;
  double weighted = 0.0;
  for (const auto& nb : neighbors) {
    mass += nb.similarity;
    weighted += nb.similarity * nb.level;
  }
  return Prediction{round_level(weighted / mass),
                    std::min(1.0, mass / static_cast<double>(n))};
}

struct RankedPaper {
  std::size_t paper;
  int group;           // 0: predicted, 1: topic fallback
  int level;           // predicted level (group 0)
  double confidence;   // prediction confidence (group 0)
  double topic;        // jaccard (group 1)
  std::size_t ratings; // explicit ratings of the paper
};

bool ranks_before(const RankedPaper& a, const RankedPaper& b) {
  if (a.group != b.group) return a.group < b.group;
  if (a.group == 0) {
    if (a.level != b.level) return a.level > b.level;
    if (a.confidence != b.confidence) return a.confidence < b.confidence;
  }
  if (a.topic != b.topic) return a.topic > b.topic;
  if (a.ratings != b.ratings) return a.ratings < b.ratings;
  return a.paper < b.paper;
}

Samples rank_samples(const Dataset& dataset, const RatingTable& table, std::size_t k,
                     bool use_predictions) {
  ExplicitIndex index(table);
  Samples samples;
  for (const auto& reviewer : dataset.reviewers) {
    std::vector<RankedPaper> ranked;
    for (std::size_t pi = 0; pi < dataset.papers.size(); ++pi) {
      const auto& paper = dataset.papers[pi];
      if (reviewer.conflicts.count(paper.id) != 0) continue;
      auto rating = table.find(reviewer.id, paper.id);
      if (rating && rating->provenance == Provenance::kExplicit) continue;

      RankedPaper rp{pi, 1, 0, 0.0, jaccard(paper.topics, reviewer.topics),
                     index.rating_count(paper.id)};
      if (use_predictions && rating) {
        rp.group = 0;
        rp.level = to_int(rating->level);
        rp.confidence = rating->confidence;
      } else if (rp.topic <= 0.0) {
        continue;
      }
      ranked.push_back(rp);
    }
    std::sort(ranked.begin(), ranked.end(), ranks_before);
    if (ranked.size() > k) ranked.resize(k);

    auto& list = samples[reviewer.id];
    for (const auto& rp : ranked) list.push_back(dataset.papers[rp.paper].id);
  }
  return samples;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Samples initial_samples(const Dataset& dataset, std::size_t k, const RatingTable& ratings) {
  return rank_samples(dataset, ratings, k, /*use_predictions=*/false);
}

std::optional<double> reviewer_similarity(const RatingTable& table, const ReviewerId& a,
                                          const ReviewerId& b) {
  ExplicitIndex index(table);
  return pearson(co_ratings(index.reviewer(a), index.reviewer(b)));
}

std::optional<double> neighbor_similarity(const RatingTable& table, const ReviewerId& a,
                                          const ReviewerId& b) {
  ExplicitIndex index(table);
  return neighbor_weight(co_ratings(index.reviewer(a), index.reviewer(b)));
}

BidLevel round_level(double value) {
  value = std::clamp(value, 0.0, static_cast<double>(kNumBidLevels - 1));
  const double lower = std::floor(value);
  const double frac = value - lower;
  int level = static_cast<int>(lower);
  if (std::abs(frac - 0.5) < 1e-9) {
    if (level < to_int(BidLevel::kNeutral)) ++level;
  } else if (frac > 0.5) {
    ++level;
  }
  return bid_level_from_int(std::min(level, kNumBidLevels - 1));
}

std::optional<Prediction> predict_rating(const RatingTable& table,
                                         const ReviewerId& reviewer, const PaperId& paper,
                                         std::size_t n) {
  ExplicitIndex index(table);
  std::unordered_map<ReviewerId, std::optional<double>> cache;
  return predict_with(index, reviewer, paper, n, cache);
}

void recompute_predictions(const Dataset& dataset, RatingTable& table, std::size_t n) {
  table.clear_predictions();
  const ExplicitIndex index(table);
  std::vector<std::tuple<ReviewerId, PaperId, Prediction>> found;
  for (const auto& reviewer : dataset.reviewers) {
    std::unordered_map<ReviewerId, std::optional<double>> cache;
    for (const auto& paper : dataset.papers) {
      if (reviewer.conflicts.count(paper.id) != 0) continue;
      if (table.has_explicit(reviewer.id, paper.id)) continue;
      if (auto p = predict_with(index, reviewer.id, paper.id, n, cache)) {
        found.emplace_back(reviewer.id, paper.id, *p);
      }
    }
  }
  for (const auto& [r, p, prediction] : found) {
    table.set_predicted(r, p, prediction.level, prediction.confidence);
  }
}

bool IrmState::samples_empty() const {
  return std::all_of(pending.begin(), pending.end(),
                     [](const auto& entry) { return entry.second.empty(); });
}

Samples select_samples(const Dataset& dataset, const RatingTable& table, std::size_t k) {
  return rank_samples(dataset, table, k, /*use_predictions=*/true);
}

IrmState start_irm(const Dataset& dataset, std::size_t k, RatingTable table) {
  IrmState state;
  state.pending = initial_samples(dataset, k, table);
  state.table = std::move(table);
  return state;
}

IrmState irm_iteration(const Dataset& dataset, IrmState state, std::size_t k,
                       std::size_t n, const BidSource& bid_source) {
  const int round = state.iteration + 1;
  for (const auto& reviewer : dataset.reviewers) {
    auto it = state.pending.find(reviewer.id);
    const std::span<const PaperId> sample =
        it == state.pending.end() ? std::span<const PaperId>{} : std::span(it->second);
    for (const auto& [paper, level] : bid_source(reviewer.id, sample)) {
      if (!dataset.paper_index(paper)) {
        state.anomalies.push_back("iteration " + std::to_string(round) + ": " +
                                  reviewer.id + " bid on unknown paper " + paper);
      } else if (reviewer.conflicts.count(paper) != 0) {
        state.anomalies.push_back("iteration " + std::to_string(round) + ": " +
                                  reviewer.id + " bid on conflicted paper " + paper +
                                  " (rejected)");
      } else {
        state.table.set_explicit(reviewer.id, paper, level);
      }
    }
  }
  recompute_predictions(dataset, state.table, n);
  state.pending = select_samples(dataset, state.table, k);
  state.iteration = round;
  return state;
}

BidLevel truth_level(const TopicSelection& paper, const TopicSelection& hidden_truth) {
  return round_level(weighted_relative(paper, hidden_truth) * (kNumBidLevels - 1));
}

BidSource simulate_bidder(const Dataset& dataset,
                          std::map<ReviewerId, TopicSelection> hidden_truth,
                          double noise, std::uint64_t seed) {
  std::unordered_map<PaperId, TopicSelection> paper_topics;
  for (const auto& p : dataset.papers) paper_topics.emplace(p.id, p.topics);
  const double flip = std::clamp(noise, 0.0, 1.0);

  return [truth = std::move(hidden_truth), paper_topics = std::move(paper_topics), flip,
          seed](const ReviewerId& reviewer, std::span<const PaperId> sample) {
    std::vector<std::pair<PaperId, BidLevel>> bids;
    auto t = truth.find(reviewer);
    if (t == truth.end()) return bids;
    const std::uint64_t rh = fnv1a(reviewer);
    for (const auto& paper : sample) {
      auto p = paper_topics.find(paper);
      if (p == paper_topics.end()) continue;
      BidLevel level = truth_level(p->second, t->second);
      const std::uint64_t ph = fnv1a(paper);
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(rh), static_cast<std::uint32_t>(rh >> 32),
                        static_cast<std::uint32_t>(ph), static_cast<std::uint32_t>(ph >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      if (coin(rng) < flip) {
        std::uniform_int_distribution<int> any(0, kNumBidLevels - 1);
        level = bid_level_from_int(any(rng));
      }
      bids.emplace_back(paper, level);
    }
    return bids;
  };
}

PredictionQuality evaluate_predictions(
    const Dataset& dataset, const RatingTable& table,
    const std::map<ReviewerId, TopicSelection>& hidden_truth) {
  std::unordered_map<PaperId, const TopicSelection*> paper_topics;
  for (const auto& p : dataset.papers) paper_topics.emplace(p.id, &p.topics);

  PredictionQuality q;
  double err = 0.0;
  double neutral_err = 0.0;
  for (const auto& [key, rating] : table.entries()) {
    if (rating.provenance != Provenance::kPredicted) continue;
    auto t = hidden_truth.find(key.first);
    auto p = paper_topics.find(key.second);
    if (t == hidden_truth.end() || p == paper_topics.end()) continue;
    const int truth = to_int(truth_level(*p->second, t->second));
    err += std::pow(to_int(rating.level) - truth, 2);
    neutral_err += std::pow(to_int(BidLevel::kNeutral) - truth, 2);
    ++q.cells;
  }
  if (q.cells > 0) {
    q.rmse = std::sqrt(err / static_cast<double>(q.cells));
    q.neutral_rmse = std::sqrt(neutral_err / static_cast<double>(q.cells));
  }
  return q;
}

}  // namespace revassign
