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

// Line-oriented text formats.
//
// Record files (dataset, ratings, truth, assignment) hold one record per
// line: a record type followed by tab-separated key=value fields. Blank lines
// and lines starting with '#' are ignored.
//
//   reviewers_per_paper  m=3
//   topic     id=0  label=Data mining
//   paper     id=p1  topics=0:1,4:0.5
//   reviewer  id=r1  capacity=4  topics=0:0.7  conflicts=p3,p9
//
//   rating    reviewer=r1  paper=p2  level=want  provenance=explicit
//   rating    reviewer=r3  paper=p2  level=can  provenance=predicted  confidence=0.4
//
//   truth     reviewer=r1  topics=0:0.8,2:0.3
//
//   outcome   algorithm=hungarian  rounds=5  total_weight=1.95  pairs=5  uncovered=0
//   pair      algorithm=hungarian  paper=p1  reviewer=r1  weight=0.4
//   uncovered algorithm=hungarian  paper=p3  shortfall=1
//
// The similarity matrix is a table: a header row "reviewer" followed by the
// paper ids, then one row per reviewer with weights printed with six
// fractional digits, all tab-separated.
//
// Reals other than matrix cells are printed in their shortest round-trip
// form, so every file re-reads to the same values.

#ifndef REVASSIGN_IO_HPP_
#define REVASSIGN_IO_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "revassign/assign.hpp"
#include "revassign/bids.hpp"
#include "revassign/core.hpp"

namespace revassign {

// Malformed input. what() reads "<source>:<line>: <field>: <message>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& field,
             const std::string& message);

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

using HiddenTruth = std::map<ReviewerId, TopicSelection>;

// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

Dataset read_dataset(std::istream& in, const std::string& source = "<input>");
void write_dataset(std::ostream& out, const Dataset& dataset);

SimilarityMatrix read_matrix(std::istream& in, const std::string& source = "<input>");
void write_matrix(std::ostream& out, const SimilarityMatrix& matrix);

RatingTable read_ratings(std::istream& in, const std::string& source = "<input>");
void write_ratings(std::ostream& out, const RatingTable& table);

HiddenTruth read_truth(std::istream& in, const std::string& source = "<input>");
void write_truth(std::ostream& out, const HiddenTruth& truth);

std::vector<AssignmentOutcome> read_assignments(std::istream& in,
                                                const std::string& source = "<input>");
void write_assignment(std::ostream& out, const AssignmentOutcome& outcome);

// Opens `path` ("-" is standard input/output) and hands the stream over.
// Throws std::runtime_error when the file cannot be opened.
void with_input_file(const std::string& path, const std::function<void(std::istream&)>& fn);
void with_output_file(const std::string& path, const std::function<void(std::ostream&)>& fn);

}  // namespace revassign

#endif  // REVASSIGN_IO_HPP_
