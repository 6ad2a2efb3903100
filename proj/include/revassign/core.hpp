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

// Domain types shared by every part of the assignment engine: the topic
// vocabulary, paper and reviewer descriptors, the reviewer x paper similarity
// matrix and the matching (set of assignments) produced from it.

#ifndef REVASSIGN_CORE_HPP_
#define REVASSIGN_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace revassign {

using TopicId = std::uint32_t;
using PaperId = std::string;
using ReviewerId = std::string;

// Conventional number of reviewers per paper.
inline constexpr int kDefaultReviewersPerPaper = 3;

// Absolute tolerance used when comparing weights.
inline constexpr double kWeightTolerance = 1e-9;

// Raised when a computation is asked for with inputs it cannot work with
// (e.g. a bid-based similarity without a rating table).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Topic {
  TopicId id = 0;
  std::string label;
};

// Ordered list of conference topics. Ids are contiguous from 0 and labels are
// unique and non-empty; the constructor throws std::invalid_argument
// otherwise.
class TopicVocabulary {
 public:
  TopicVocabulary() = default;
  explicit TopicVocabulary(std::vector<std::string> labels);

  std::size_t size() const { return topics_.size(); }
  bool contains(TopicId id) const { return id < topics_.size(); }
  const Topic& at(TopicId id) const { return topics_.at(id); }
  std::optional<TopicId> find(const std::string& label) const;
  const std::vector<Topic>& topics() const { return topics_; }

 private:
  std::vector<Topic> topics_;
};

// Topic id -> weight. Weight 0 means "not selected" and is never stored.
// Range checking against [0, 1] and the vocabulary is left to
// validate_dataset so that malformed input can be reported rather than
// rejected on construction.
class TopicSelection {
 public:
  TopicSelection() = default;
  TopicSelection(std::initializer_list<std::pair<const TopicId, double>> init);
  explicit TopicSelection(std::map<TopicId, double> entries);

  // All listed topics with weight 1.
  static TopicSelection binary(std::initializer_list<TopicId> ids);
  static TopicSelection binary(std::span<const TopicId> ids);

  // Sets (or with weight 0, removes) a topic.
  void set(TopicId id, double weight);

  double weight(TopicId id) const;
  bool contains(TopicId id) const { return entries_.count(id) != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool is_binary() const;

  const std::map<TopicId, double>& entries() const { return entries_; }

  friend bool operator==(const TopicSelection&, const TopicSelection&) = default;

 private:
  std::map<TopicId, double> entries_;
};

struct PaperDescriptor {
  PaperId id;
  TopicSelection topics;
};

struct ReviewerDescriptor {
  ReviewerId id;
  TopicSelection topics;
  int capacity = 1;
  std::set<PaperId> conflicts;
};

struct Dataset {
  TopicVocabulary vocabulary;
  std::vector<PaperDescriptor> papers;
  std::vector<ReviewerDescriptor> reviewers;
  int reviewers_per_paper = kDefaultReviewersPerPaper;

  std::optional<std::size_t> paper_index(const PaperId& id) const;
  std::optional<std::size_t> reviewer_index(const ReviewerId& id) const;
  std::vector<int> capacities() const;
};

enum class ViolationKind {
  kUnknownTopic,
  kWeightOutOfRange,
  kDuplicatePaper,
  kDuplicateReviewer,
  kBadCapacity,
  kUnknownConflictPaper,
  kBadReviewersPerPaper,
  kCapacityInfeasible,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

// Collects every problem with a dataset; never throws.
ValidationReport validate_dataset(const TopicVocabulary& vocabulary,
                                  std::span<const PaperDescriptor> papers,
                                  std::span<const ReviewerDescriptor> reviewers,
                                  int reviewers_per_paper);
ValidationReport validate_dataset(const Dataset& dataset);

// Dense reviewers x papers table of edge weights in [0, 1]. Rows are
// reviewers, columns are papers, both in a fixed order.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  // Zero-filled matrix.
  SimilarityMatrix(std::vector<ReviewerId> reviewers, std::vector<PaperId> papers);
  // Row-major weights; throws std::invalid_argument on a size mismatch,
  // duplicate ids or a weight outside [0, 1].
  SimilarityMatrix(std::vector<ReviewerId> reviewers, std::vector<PaperId> papers,
                   std::vector<double> weights);

  std::size_t num_reviewers() const { return reviewers_.size(); }
  std::size_t num_papers() const { return papers_.size(); }

  double at(std::size_t reviewer, std::size_t paper) const {
    return weights_[reviewer * papers_.size() + paper];
  }
  void set(std::size_t reviewer, std::size_t paper, double weight);

  const std::vector<ReviewerId>& reviewer_ids() const { return reviewers_; }
  const std::vector<PaperId>& paper_ids() const { return papers_; }
  std::span<const double> weights() const { return weights_; }

  std::optional<std::size_t> reviewer_index(const ReviewerId& id) const;
  std::optional<std::size_t> paper_index(const PaperId& id) const;

  // Number of reviewers with a nonzero weight for the paper.
  std::size_t candidate_count(std::size_t paper) const;

  friend bool operator==(const SimilarityMatrix& a, const SimilarityMatrix& b) {
    return a.reviewers_ == b.reviewers_ && a.papers_ == b.papers_ &&
           a.weights_ == b.weights_;
  }

 private:
  void index_ids();

  std::vector<ReviewerId> reviewers_;
  std::vector<PaperId> papers_;
  std::vector<double> weights_;
  std::unordered_map<ReviewerId, std::size_t> reviewer_lookup_;
  std::unordered_map<PaperId, std::size_t> paper_lookup_;
};

struct AssignmentPair {
  PaperId paper;
  ReviewerId reviewer;
  double weight = 0.0;

  friend bool operator==(const AssignmentPair&, const AssignmentPair&) = default;
};

// The matching: every (paper, reviewer) assignment with the weight copied
// from the similarity matrix.
struct AssignmentSet {
  std::vector<AssignmentPair> pairs;

  friend bool operator==(const AssignmentSet&, const AssignmentSet&) = default;
};

// Sum of the pair weights.
double weight_of_matching(const AssignmentSet& assignment);

// Checks the AssignmentSet invariants against the matrix it came from:
// known ids, weight equal to the matrix cell, no duplicates, no zero-weight
// pairs, per-reviewer load <= capacity and per-paper load <= m. Returns a
// human-readable description of every broken invariant.
std::vector<std::string> check_assignment(const AssignmentSet& assignment,
                                          const SimilarityMatrix& matrix,
                                          int reviewers_per_paper,
                                          std::span<const int> capacities);

}  // namespace revassign

#endif  // REVASSIGN_CORE_HPP_
