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

// Bid levels and the sparse rating table that records them.

#ifndef REVASSIGN_BIDS_HPP_
#define REVASSIGN_BIDS_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "revassign/core.hpp"

namespace revassign {

// Ordinal willingness scale; the integer value is the level used in
// correlation math (0 = lowest willingness).
enum class BidLevel : int {
  kCannotOrConflict = 0,
  kPreferNot = 1,
  kNeutral = 2,
  kCanReview = 3,
  kWantToReview = 4,
};

inline constexpr int kNumBidLevels = 5;

constexpr int to_int(BidLevel level) { return static_cast<int>(level); }

// Throws std::out_of_range for values outside 0..4.
BidLevel bid_level_from_int(int value);

std::string_view to_string(BidLevel level);
std::optional<BidLevel> parse_bid_level(std::string_view text);

// Edge weight for every level, indexed by to_int(level). Must be
// non-decreasing and inside [0, 1].
class BidScale {
 public:
  // Uniform spacing: 0, 0.25, 0.5, 0.75, 1.
  BidScale();
  explicit BidScale(std::array<double, kNumBidLevels> weights);

  double weight(BidLevel level) const { return weights_[to_int(level)]; }
  const std::array<double, kNumBidLevels>& weights() const { return weights_; }

  friend bool operator==(const BidScale&, const BidScale&) = default;

 private:
  std::array<double, kNumBidLevels> weights_;
};

enum class Provenance { kExplicit, kPredicted };

struct Rating {
  BidLevel level = BidLevel::kNeutral;
  Provenance provenance = Provenance::kExplicit;
  // 1 for explicit ratings; in [0, 1] for predictions.
  double confidence = 1.0;
};

// Sparse (reviewer, paper) -> rating. At most one entry per cell; predictions
// never replace explicit ratings.
class RatingTable {
 public:
  using Key = std::pair<ReviewerId, PaperId>;

  // Records an explicit bid, replacing whatever the cell held.
  void set_explicit(const ReviewerId& reviewer, const PaperId& paper, BidLevel level);

  // Records a prediction unless the cell holds an explicit bid. Returns
  // whether the prediction was stored.
  bool set_predicted(const ReviewerId& reviewer, const PaperId& paper, BidLevel level,
                     double confidence);

  void clear_predictions();

  std::optional<Rating> find(const ReviewerId& reviewer, const PaperId& paper) const;
  bool has_explicit(const ReviewerId& reviewer, const PaperId& paper) const;

  std::size_t explicit_count() const { return explicit_count_; }
  std::size_t predicted_count() const { return entries_.size() - explicit_count_; }
  std::size_t size() const { return entries_.size(); }

  const std::map<Key, Rating>& entries() const { return entries_; }

 private:
  std::map<Key, Rating> entries_;
  std::size_t explicit_count_ = 0;
};

}  // namespace revassign

#endif  // REVASSIGN_BIDS_HPP_
