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

#include "revassign/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>
#include <unordered_set>

namespace revassign {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& field,
                       const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + field + ": " + message),
      line_(line),
      field_(field) {}

std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format real");
  return std::string(buf, end);
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// One parsed line of a record file.
class Record {
 public:
  Record(const std::string& source, std::size_t line, std::string_view text)
      : source_(source), line_(line) {
    auto parts = split(text, '\t');
    type_ = std::string(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string_view::npos || eq == 0) {
        fail(std::string(parts[i]), "expected key=value");
      }
      std::string key(parts[i].substr(0, eq));
      if (!fields_.emplace(key, std::string(parts[i].substr(eq + 1))).second) {
        fail(key, "repeated field");
      }
    }
  }

  const std::string& type() const { return type_; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(source_, line_, field, message);
  }

  bool has(const std::string& key) const { return fields_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end()) fail(key, "missing field");
    return it->second;
  }

  std::string optional_text(const std::string& key) const {
    auto it = fields_.find(key);
    return it == fields_.end() ? std::string() : it->second;
  }

  const std::string& id(const std::string& key) const {
    const auto& value = text(key);
    if (value.empty()) fail(key, "empty identifier");
    if (value.find(',') != std::string::npos) fail(key, "identifier contains ','");
    return value;
  }

  double real(const std::string& key) const { return parse_real(key, text(key)); }

  long long integer(const std::string& key) const {
    const auto& value = text(key);
    long long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      fail(key, "expected an integer, got '" + value + "'");
    }
    return out;
  }

  double parse_real(const std::string& key, std::string_view value) const {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      fail(key, "expected a number, got '" + std::string(value) + "'");
    }
    return out;
  }

  TopicSelection topics(const std::string& key) const {
    TopicSelection selection;
    const auto& value = optional_text(key);
    if (value.empty()) return selection;
    std::unordered_set<TopicId> seen;
    for (auto item : split(value, ',')) {
      const auto colon = item.find(':');
      std::string_view id_text = item.substr(0, colon);
      TopicId id = 0;
      auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
      if (ec != std::errc() || ptr != id_text.data() + id_text.size()) {
        fail(key, "bad topic id '" + std::string(id_text) + "'");
      }
      if (!seen.insert(id).second) fail(key, "topic " + std::to_string(id) + " listed twice");
      const double w = colon == std::string_view::npos ? 1.0
                                                       : parse_real(key, item.substr(colon + 1));
      selection.set(id, w);
    }
    return selection;
  }

  std::vector<std::string> list(const std::string& key) const {
    std::vector<std::string> out;
    const auto& value = optional_text(key);
    if (value.empty()) return out;
    for (auto item : split(value, ',')) {
      if (item.empty()) fail(key, "empty list item");
      out.emplace_back(item);
    }
    return out;
  }

  void expect_only(std::initializer_list<const char*> keys) const {
    for (const auto& [key, value] : fields_) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) fail(key, "unknown field for record '" + type_ + "'");
    }
  }

 private:
  const std::string& source_;
  std::size_t line_;
  std::string type_;
  std::map<std::string, std::string> fields_;
};

template <typename Fn>
void for_each_record(std::istream& in, const std::string& source, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(Record(source, number, line));
  }
}

std::string format_topics(const TopicSelection& selection) {
  std::string out;
  for (const auto& [id, w] : selection.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(id);
    if (w != 1.0) out += ":" + format_real(w);
  }
  return out;
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

Dataset read_dataset(std::istream& in, const std::string& source) {
  Dataset dataset;
  std::vector<std::string> labels;
  std::optional<std::size_t> m_line;
  for_each_record(in, source, [&](const Record& rec) {
    if (rec.type() == "reviewers_per_paper") {
      rec.expect_only({"m"});
      if (m_line) rec.fail("m", "reviewers_per_paper given twice");
      m_line = rec.line();
      dataset.reviewers_per_paper = static_cast<int>(rec.integer("m"));
    } else if (rec.type() == "topic") {
      rec.expect_only({"id", "label"});
      const long long id = rec.integer("id");
      if (id != static_cast<long long>(labels.size())) {
        rec.fail("id", "topic ids must be contiguous from 0; expected " +
                           std::to_string(labels.size()));
      }
      const auto& label = rec.text("label");
      if (label.empty()) rec.fail("label", "empty topic label");
      for (const auto& l : labels) {
        if (l == label) rec.fail("label", "duplicate topic label '" + label + "'");
      }
      labels.push_back(label);
    } else if (rec.type() == "paper") {
      rec.expect_only({"id", "topics"});
      dataset.papers.push_back({rec.id("id"), rec.topics("topics")});
    } else if (rec.type() == "reviewer") {
      rec.expect_only({"id", "capacity", "topics", "conflicts"});
      ReviewerDescriptor r;
      r.id = rec.id("id");
      r.capacity = static_cast<int>(rec.integer("capacity"));
      r.topics = rec.topics("topics");
      for (auto& c : rec.list("conflicts")) r.conflicts.insert(std::move(c));
      dataset.reviewers.push_back(std::move(r));
    } else {
      rec.fail("record", "unknown record type '" + rec.type() + "'");
    }
  });
  dataset.vocabulary = TopicVocabulary(std::move(labels));
  return dataset;
}

void write_dataset(std::ostream& out, const Dataset& dataset) {
  out << "# revassign dataset\n";
  out << "reviewers_per_paper\tm=" << dataset.reviewers_per_paper << '\n';
  for (const auto& t : dataset.vocabulary.topics()) {
    out << "topic\tid=" << t.id << "\tlabel=" << t.label << '\n';
  }
  for (const auto& p : dataset.papers) {
    out << "paper\tid=" << p.id << "\ttopics=" << format_topics(p.topics) << '\n';
  }
  for (const auto& r : dataset.reviewers) {
    out << "reviewer\tid=" << r.id << "\tcapacity=" << r.capacity
        << "\ttopics=" << format_topics(r.topics) << "\tconflicts=";
    bool first = true;
    for (const auto& c : r.conflicts) {
      out << (first ? "" : ",") << c;
      first = false;
    }
    out << '\n';
  }
}

SimilarityMatrix read_matrix(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t number = 0;
  std::vector<PaperId> papers;
  std::vector<ReviewerId> reviewers;
  std::vector<double> weights;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line, '\t');
    if (!header) {
      if (cells[0] != "reviewer") {
        throw ParseError(source, number, "header", "expected 'reviewer' in the first cell");
      }
      for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].empty()) throw ParseError(source, number, "header", "empty paper id");
        papers.emplace_back(cells[i]);
      }
      header = true;
      continue;
    }
    if (cells.size() != papers.size() + 1) {
      throw ParseError(source, number, "row",
                       "expected " + std::to_string(papers.size() + 1) + " cells, got " +
                           std::to_string(cells.size()));
    }
    if (cells[0].empty()) throw ParseError(source, number, "reviewer", "empty reviewer id");
    reviewers.emplace_back(cells[0]);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      double w = 0.0;
      auto [ptr, ec] = std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), w);
      const std::string field = "column " + std::string(papers[i - 1]);
      if (ec != std::errc() || ptr != cells[i].data() + cells[i].size()) {
        throw ParseError(source, number, field,
                         "expected a number, got '" + std::string(cells[i]) + "'");
      }
      if (!(w >= 0.0 && w <= 1.0)) {
        throw ParseError(source, number, field, "weight outside [0, 1]");
      }
      weights.push_back(w);
    }
  }
  if (!header) throw ParseError(source, number, "header", "missing header row");
  try {
    return SimilarityMatrix(std::move(reviewers), std::move(papers), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, number, "matrix", e.what());
  }
}

void write_matrix(std::ostream& out, const SimilarityMatrix& matrix) {
  out << "reviewer";
  for (const auto& p : matrix.paper_ids()) out << '\t' << p;
  out << '\n';
  for (std::size_t r = 0; r < matrix.num_reviewers(); ++r) {
    out << matrix.reviewer_ids()[r];
    for (std::size_t p = 0; p < matrix.num_papers(); ++p) {
      out << '\t' << format_fixed6(matrix.at(r, p));
    }
    out << '\n';
  }
}

RatingTable read_ratings(std::istream& in, const std::string& source) {
  RatingTable table;
  for_each_record(in, source, [&](const Record& rec) {
    if (rec.type() != "rating") rec.fail("record", "unknown record type '" + rec.type() + "'");
    rec.expect_only({"reviewer", "paper", "level", "provenance", "confidence"});
    const auto& reviewer = rec.id("reviewer");
    const auto& paper = rec.id("paper");
    if (table.find(reviewer, paper)) rec.fail("paper", "cell rated twice");
    auto level = parse_bid_level(rec.text("level"));
    if (!level) rec.fail("level", "unknown bid level '" + rec.text("level") + "'");
    const auto& provenance = rec.text("provenance");
    if (provenance == "explicit") {
      table.set_explicit(reviewer, paper, *level);
    } else if (provenance == "predicted") {
      const double confidence = rec.real("confidence");
      if (!(confidence >= 0.0 && confidence <= 1.0)) {
        rec.fail("confidence", "outside [0, 1]");
      }
      table.set_predicted(reviewer, paper, *level, confidence);
    } else {
      rec.fail("provenance", "expected 'explicit' or 'predicted'");
    }
  });
  return table;
}

void write_ratings(std::ostream& out, const RatingTable& table) {
  out << "# revassign ratings\n";
  for (const auto& [key, rating] : table.entries()) {
    out << "rating\treviewer=" << key.first << "\tpaper=" << key.second
        << "\tlevel=" << to_string(rating.level);
    if (rating.provenance == Provenance::kExplicit) {
      out << "\tprovenance=explicit\n";
    } else {
      out << "\tprovenance=predicted\tconfidence=" << format_real(rating.confidence) << '\n';
    }
  }
}

HiddenTruth read_truth(std::istream& in, const std::string& source) {
  HiddenTruth truth;
  for_each_record(in, source, [&](const Record& rec) {
    if (rec.type() != "truth") rec.fail("record", "unknown record type '" + rec.type() + "'");
    rec.expect_only({"reviewer", "topics"});
    if (!truth.emplace(rec.id("reviewer"), rec.topics("topics")).second) {
      rec.fail("reviewer", "reviewer listed twice");
    }
  });
  return truth;
}

void write_truth(std::ostream& out, const HiddenTruth& truth) {
  out << "# revassign hidden truth\n";
  for (const auto& [reviewer, topics] : truth) {
    out << "truth\treviewer=" << reviewer << "\ttopics=" << format_topics(topics) << '\n';
  }
}

std::vector<AssignmentOutcome> read_assignments(std::istream& in, const std::string& source) {
  std::vector<AssignmentOutcome> outcomes;
  auto current = [&](const Record& rec) -> AssignmentOutcome& {
    const auto& algorithm = rec.text("algorithm");
    if (outcomes.empty() || outcomes.back().algorithm != algorithm) {
      rec.fail("algorithm", "record before its 'outcome' line");
    }
    return outcomes.back();
  };
  for_each_record(in, source, [&](const Record& rec) {
    if (rec.type() == "outcome") {
      rec.expect_only({"algorithm", "rounds", "total_weight", "pairs", "uncovered"});
      AssignmentOutcome o;
      o.algorithm = rec.text("algorithm");
      o.rounds = static_cast<int>(rec.integer("rounds"));
      outcomes.push_back(std::move(o));
    } else if (rec.type() == "pair") {
      rec.expect_only({"algorithm", "paper", "reviewer", "weight"});
      auto& o = current(rec);
      const double w = rec.real("weight");
      if (!(w > 0.0 && w <= 1.0)) rec.fail("weight", "pair weight must be in (0, 1]");
      o.assignment.pairs.push_back({rec.id("paper"), rec.id("reviewer"), w});
    } else if (rec.type() == "uncovered") {
      rec.expect_only({"algorithm", "paper", "shortfall"});
      auto& o = current(rec);
      o.uncovered.push_back({rec.id("paper"), static_cast<int>(rec.integer("shortfall"))});
    } else {
      rec.fail("record", "unknown record type '" + rec.type() + "'");
    }
  });
  for (auto& o : outcomes) o.total_weight = weight_of_matching(o.assignment);
  return outcomes;
}

void write_assignment(std::ostream& out, const AssignmentOutcome& outcome) {
  out << "outcome\talgorithm=" << outcome.algorithm << "\trounds=" << outcome.rounds
      << "\ttotal_weight=" << format_real(outcome.total_weight)
      << "\tpairs=" << outcome.assignment.pairs.size()
      << "\tuncovered=" << outcome.uncovered.size() << '\n';
  for (const auto& pair : outcome.assignment.pairs) {
    out << "pair\talgorithm=" << outcome.algorithm << "\tpaper=" << pair.paper
        << "\treviewer=" << pair.reviewer << "\tweight=" << format_real(pair.weight) << '\n';
  }
  for (const auto& u : outcome.uncovered) {
    out << "uncovered\talgorithm=" << outcome.algorithm << "\tpaper=" << u.paper
        << "\tshortfall=" << u.shortfall << '\n';
  }
}

void with_input_file(const std::string& path, const std::function<void(std::istream&)>& fn) {
  if (path == "-") {
    fn(std::cin);
    return;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  fn(in);
}

void with_output_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace revassign
