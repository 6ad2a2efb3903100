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

#include "revassign/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace revassign {

TopicVocabulary::TopicVocabulary(std::vector<std::string> labels) {
  std::unordered_set<std::string> seen;
  topics_.reserve(labels.size());
  for (auto& label : labels) {
    if (label.empty()) {
      throw std::invalid_argument("topic label must not be empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate topic label '" + label + "'");
    }
    topics_.push_back({static_cast<TopicId>(topics_.size()), std::move(label)});
  }
}

std::optional<TopicId> TopicVocabulary::find(const std::string& label) const {
  for (const auto& t : topics_) {
    if (t.label == label) return t.id;
  }
  return std::nullopt;
}

TopicSelection::TopicSelection(
    std::initializer_list<std::pair<const TopicId, double>> init) {
  for (const auto& [id, w] : init) set(id, w);
}

TopicSelection::TopicSelection(std::map<TopicId, double> entries) {
  for (const auto& [id, w] : entries) set(id, w);
}

TopicSelection TopicSelection::binary(std::initializer_list<TopicId> ids) {
  return binary(std::span<const TopicId>(ids.begin(), ids.size()));
}

TopicSelection TopicSelection::binary(std::span<const TopicId> ids) {
  TopicSelection s;
  for (TopicId id : ids) s.set(id, 1.0);
  return s;
}

void TopicSelection::set(TopicId id, double weight) {
  if (weight == 0.0) {
    entries_.erase(id);
  } else {
    entries_[id] = weight;
  }
}

double TopicSelection::weight(TopicId id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? 0.0 : it->second;
}

bool TopicSelection::is_binary() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second == 1.0; });
}

std::optional<std::size_t> Dataset::paper_index(const PaperId& id) const {
  for (std::size_t i = 0; i < papers.size(); ++i) {
    if (papers[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Dataset::reviewer_index(const ReviewerId& id) const {
  for (std::size_t i = 0; i < reviewers.size(); ++i) {
    if (reviewers[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<int> Dataset::capacities() const {
  std::vector<int> caps;
  caps.reserve(reviewers.size());
  for (const auto& r : reviewers) caps.push_back(r.capacity);
  return caps;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownTopic: return "unknown-topic";
    case ViolationKind::kWeightOutOfRange: return "weight-out-of-range";
    case ViolationKind::kDuplicatePaper: return "duplicate-paper";
    case ViolationKind::kDuplicateReviewer: return "duplicate-reviewer";
    case ViolationKind::kBadCapacity: return "bad-capacity";
    case ViolationKind::kUnknownConflictPaper: return "unknown-conflict-paper";
    case ViolationKind::kBadReviewersPerPaper: return "bad-reviewers-per-paper";
    case ViolationKind::kCapacityInfeasible: return "capacity-infeasible";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

void check_selection(const TopicVocabulary& vocabulary,
                     const TopicSelection& selection, const std::string& owner,
                     std::vector<Violation>& out) {
  for (const auto& [id, w] : selection.entries()) {
    if (!vocabulary.contains(id)) {
      out.push_back({ViolationKind::kUnknownTopic,
                     owner + ": unknown topic id " + std::to_string(id)});
    }
    if (!(w >= 0.0 && w <= 1.0)) {
      std::ostringstream msg;
      msg << owner << ": topic " << id << " weight " << w << " outside [0, 1]";
      out.push_back({ViolationKind::kWeightOutOfRange, msg.str()});
    }
  }
}

}  // namespace

ValidationReport validate_dataset(const TopicVocabulary& vocabulary,
                                  std::span<const PaperDescriptor> papers,
                                  std::span<const ReviewerDescriptor> reviewers,
                                  int reviewers_per_paper) {
  ValidationReport report;
  auto& out = report.violations;

  std::unordered_set<PaperId> paper_ids;
  for (const auto& p : papers) {
    if (!paper_ids.insert(p.id).second) {
      out.push_back({ViolationKind::kDuplicatePaper, "duplicate paper id '" + p.id + "'"});
    }
    check_selection(vocabulary, p.topics, "paper '" + p.id + "'", out);
  }

  std::unordered_set<ReviewerId> reviewer_ids;
  long long total_capacity = 0;
  for (const auto& r : reviewers) {
    const std::string owner = "reviewer '" + r.id + "'";
    if (!reviewer_ids.insert(r.id).second) {
      out.push_back({ViolationKind::kDuplicateReviewer, "duplicate reviewer id '" + r.id + "'"});
    }
    if (r.capacity < 1) {
      out.push_back({ViolationKind::kBadCapacity,
                     owner + ": capacity " + std::to_string(r.capacity) + " < 1"});
    } else {
      total_capacity += r.capacity;
    }
    check_selection(vocabulary, r.topics, owner, out);
    for (const auto& c : r.conflicts) {
      if (paper_ids.count(c) == 0) {
        out.push_back({ViolationKind::kUnknownConflictPaper,
                       owner + ": conflict with unknown paper '" + c + "'"});
      }
    }
  }

  if (reviewers_per_paper < 1) {
    out.push_back({ViolationKind::kBadReviewersPerPaper,
                   "reviewers per paper " + std::to_string(reviewers_per_paper) + " < 1"});
  } else {
    const long long required =
        static_cast<long long>(reviewers_per_paper) * static_cast<long long>(papers.size());
    if (total_capacity < required) {
      out.push_back({ViolationKind::kCapacityInfeasible,
                     "sum of capacities " + std::to_string(total_capacity) + " < " +
                         std::to_string(required) + " (m * papers)"});
    }
  }
  return report;
}

ValidationReport validate_dataset(const Dataset& dataset) {
  return validate_dataset(dataset.vocabulary, dataset.papers, dataset.reviewers,
                          dataset.reviewers_per_paper);
}

SimilarityMatrix::SimilarityMatrix(std::vector<ReviewerId> reviewers,
                                   std::vector<PaperId> papers)
    : reviewers_(std::move(reviewers)),
      papers_(std::move(papers)),
      weights_(reviewers_.size() * papers_.size(), 0.0) {
  index_ids();
}

SimilarityMatrix::SimilarityMatrix(std::vector<ReviewerId> reviewers,
                                   std::vector<PaperId> papers,
                                   std::vector<double> weights)
    : reviewers_(std::move(reviewers)),
      papers_(std::move(papers)),
      weights_(std::move(weights)) {
  if (weights_.size() != reviewers_.size() * papers_.size()) {
    throw std::invalid_argument("similarity matrix: expected " +
                                std::to_string(reviewers_.size() * papers_.size()) +
                                " weights, got " + std::to_string(weights_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("similarity matrix: weight outside [0, 1]");
    }
  }
  index_ids();
}

void SimilarityMatrix::index_ids() {
  for (std::size_t i = 0; i < reviewers_.size(); ++i) {
    if (!reviewer_lookup_.emplace(reviewers_[i], i).second) {
      throw std::invalid_argument("similarity matrix: duplicate reviewer '" +
                                  reviewers_[i] + "'");
    }
  }
  for (std::size_t j = 0; j < papers_.size(); ++j) {
    if (!paper_lookup_.emplace(papers_[j], j).second) {
      throw std::invalid_argument("similarity matrix: duplicate paper '" + papers_[j] + "'");
    }
  }
}

void SimilarityMatrix::set(std::size_t reviewer, std::size_t paper, double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("similarity matrix: weight outside [0, 1]");
  }
  weights_.at(reviewer * papers_.size() + paper) = weight;
}

std::optional<std::size_t> SimilarityMatrix::reviewer_index(const ReviewerId& id) const {
  auto it = reviewer_lookup_.find(id);
  if (it == reviewer_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SimilarityMatrix::paper_index(const PaperId& id) const {
  auto it = paper_lookup_.find(id);
  if (it == paper_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimilarityMatrix::candidate_count(std::size_t paper) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < reviewers_.size(); ++r) {
    if (at(r, paper) > 0.0) ++n;
  }
  return n;
}

double weight_of_matching(const AssignmentSet& assignment) {
  double total = 0.0;
  for (const auto& pair : assignment.pairs) total += pair.weight;
  return total;
}

std::vector<std::string> check_assignment(const AssignmentSet& assignment,
                                          const SimilarityMatrix& matrix,
                                          int reviewers_per_paper,
                                          std::span<const int> capacities) {
  std::vector<std::string> problems;
  std::vector<int> reviewer_load(matrix.num_reviewers(), 0);
  std::vector<int> paper_load(matrix.num_papers(), 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;

  for (const auto& pair : assignment.pairs) {
    auto r = matrix.reviewer_index(pair.reviewer);
    auto p = matrix.paper_index(pair.paper);
    const std::string label = "(" + pair.paper + ", " + pair.reviewer + ")";
    if (!r || !p) {
      problems.push_back(label + ": unknown id");
      continue;
    }
    if (!seen.emplace(*r, *p).second) problems.push_back(label + ": duplicate pair");
    if (pair.weight <= 0.0) problems.push_back(label + ": zero-weight pair");
    if (std::abs(pair.weight - matrix.at(*r, *p)) > kWeightTolerance) {
      problems.push_back(label + ": weight differs from matrix");
    }
    ++reviewer_load[*r];
    ++paper_load[*p];
  }
  for (std::size_t r = 0; r < reviewer_load.size(); ++r) {
    const int cap = r < capacities.size() ? capacities[r] : 0;
    if (reviewer_load[r] > cap) {
      problems.push_back("reviewer '" + matrix.reviewer_ids()[r] + "' load " +
                         std::to_string(reviewer_load[r]) + " > capacity " +
                         std::to_string(cap));
    }
  }
  for (std::size_t p = 0; p < paper_load.size(); ++p) {
    if (paper_load[p] > reviewers_per_paper) {
      problems.push_back("paper '" + matrix.paper_ids()[p] + "' has " +
                         std::to_string(paper_load[p]) + " reviewers > m");
    }
  }
  return problems;
}

}  // namespace revassign
