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

// Command-line front end: gen, similarity, assign, irm and bench.

#ifndef REVASSIGN_CLI_HPP_
#define REVASSIGN_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revassign/core.hpp"
#include "revassign/io.hpp"
#include "revassign/ratings.hpp"
#include "revassign/similarity.hpp"

namespace revassign::cli {

// Synthetic dataset parameters.
struct GenConfig {
  std::uint64_t seed = 0;
  int papers = 1;
  int reviewers = 1;
  int topics = 20;
  // Probability that a descriptor selects a given topic.
  double density = 0.2;
  int reviewers_per_paper = kDefaultReviewersPerPaper;
  // Per-reviewer capacity; 0 picks ceil(m * papers / reviewers) + 1.
  int capacity = 0;
  // Probability of a conflict on any (reviewer, paper) cell.
  double conflict_rate = 0.0;
  // All selected weights 1 instead of levels 0.25 .. 1.
  bool binary = false;
  // Standard deviation of the jitter between declared and hidden expertise.
  double truth_noise = 0.1;
};

struct GeneratedData {
  Dataset dataset;
  HiddenTruth truth;
};

// Deterministic for a given config. Every descriptor selects at least one
// topic.
GeneratedData generate_dataset(const GenConfig& config);

enum class Algorithm { kHungarian, kMultipass, kGreedy, kHeuristic, kAll };

struct RunConfig {
  SimilarityMethod method = TopicMeasure::kJaccard;
  int reviewers_per_paper = kDefaultReviewersPerPaper;
  Algorithm algorithm = Algorithm::kHungarian;
  std::size_t sample_size = kDefaultSampleSize;
  std::size_t neighborhood = kDefaultNeighborhood;
  std::optional<std::uint64_t> seed;
  std::string dataset_path;
  std::string ratings_path;
  std::string matrix_path;
  std::string output_path = "-";
};

// Runs the tool with argv-style arguments (without the program name).
// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revassign::cli

#endif  // REVASSIGN_CLI_HPP_
