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

#include "revassign/bids.hpp"

#include <stdexcept>
#include <string>

namespace revassign {

namespace {

constexpr std::array<std::string_view, kNumBidLevels> kLevelNames = {
    "cannot", "prefer-not", "neutral", "can", "want"};

}  // namespace

BidLevel bid_level_from_int(int value) {
  if (value < 0 || value >= kNumBidLevels) {
    throw std::out_of_range("bid level " + std::to_string(value) + " outside 0..4");
  }
  return static_cast<BidLevel>(value);
}

std::string_view to_string(BidLevel level) { return kLevelNames[to_int(level)]; }

std::optional<BidLevel> parse_bid_level(std::string_view text) {
  for (int i = 0; i < kNumBidLevels; ++i) {
    if (kLevelNames[i] == text) return static_cast<BidLevel>(i);
  }
  return std::nullopt;
}

BidScale::BidScale() : weights_{0.0, 0.25, 0.5, 0.75, 1.0} {}

BidScale::BidScale(std::array<double, kNumBidLevels> weights) : weights_(weights) {
  for (int i = 0; i < kNumBidLevels; ++i) {
    if (!(weights_[i] >= 0.0 && weights_[i] <= 1.0)) {
      throw std::invalid_argument("bid scale weight outside [0, 1]");
    }
    if (i > 0 && weights_[i] < weights_[i - 1]) {
      throw std::invalid_argument("bid scale must be non-decreasing");
    }
  }
}

void RatingTable::set_explicit(const ReviewerId& reviewer, const PaperId& paper,
                               BidLevel level) {
  auto [it, inserted] = entries_.try_emplace({reviewer, paper});
  if (inserted || it->second.provenance != Provenance::kExplicit) ++explicit_count_;
  it->second = Rating{level, Provenance::kExplicit, 1.0};
}

bool RatingTable::set_predicted(const ReviewerId& reviewer, const PaperId& paper,
                                BidLevel level, double confidence) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw std::invalid_argument("prediction confidence outside [0, 1]");
  }
  auto [it, inserted] = entries_.try_emplace({reviewer, paper});
  if (!inserted && it->second.provenance == Provenance::kExplicit) return false;
  it->second = Rating{level, Provenance::kPredicted, confidence};
  return true;
}

void RatingTable::clear_predictions() {
  std::erase_if(entries_, [](const auto& e) {
    return e.second.provenance == Provenance::kPredicted;
  });
}

std::optional<Rating> RatingTable::find(const ReviewerId& reviewer,
                                        const PaperId& paper) const {
  auto it = entries_.find({reviewer, paper});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool RatingTable::has_explicit(const ReviewerId& reviewer, const PaperId& paper) const {
  auto r = find(reviewer, paper);
  return r && r->provenance == Provenance::kExplicit;
}

}  // namespace revassign
