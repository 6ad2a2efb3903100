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

#include "revassign/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "revassign/assign.hpp"

namespace revassign::cli {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

constexpr std::array<double, 4> kWeightLevels = {0.25, 0.5, 0.75, 1.0};

std::string fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string padded_id(char prefix, int index, int count) {
  const int width = static_cast<int>(std::to_string(count).size());
  std::string digits = std::to_string(index + 1);
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Where a command writes its main output and its human-readable report.
// With the output on standard output the report moves to standard error.
struct Sinks {
  std::ostream& out;
  std::ostream& err;
  std::string path;

  std::ostream& report() const { return path == "-" ? err : out; }

  void write(const std::function<void(std::ostream&)>& fn) const {
    if (path == "-") {
      fn(out);
    } else {
      with_output_file(path, fn);
    }
  }
};

Dataset load_dataset(const std::string& path) {
  Dataset dataset;
  with_input_file(path, [&](std::istream& in) { dataset = read_dataset(in, path); });
  return dataset;
}

// Rejects datasets the commands cannot work on. Capacity shortfall is only a
// warning; the assignment reports it as uncovered papers.
bool check_dataset(const Dataset& dataset, std::ostream& err, bool* infeasible = nullptr) {
  if (dataset.papers.empty()) {
    err << "error: no papers\n";
    return false;
  }
  if (dataset.reviewers.empty()) {
    err << "error: no reviewers\n";
    return false;
  }
  bool ok = true;
  for (const auto& v : validate_dataset(dataset).violations) {
    if (v.kind == ViolationKind::kCapacityInfeasible) {
      err << "warning: " << v.message << '\n';
      if (infeasible) *infeasible = true;
    } else {
      err << "error: " << to_string(v.kind) << ": " << v.message << '\n';
      ok = false;
    }
  }
  return ok;
}

struct MethodOptions {
  std::string method = "jaccard";
  std::string topic_method = "jaccard";
  std::string ratings_path;
  std::string injected_path;

  void add_to(CLI::App& app) {
    app.add_option("--method", method,
                   "jaccard, dice, weighted-relative, weighted-absolute, easychair, bid, "
                   "combined or injected")
        ->capture_default_str()
        ->check(CLI::IsMember({"jaccard", "dice", "weighted-relative", "weighted-absolute",
                               "easychair", "bid", "combined", "injected"}));
    app.add_option("--topic-method", topic_method, "Topic measure used by --method combined")
        ->capture_default_str()
        ->check(CLI::IsMember({"jaccard", "dice", "weighted-relative", "weighted-absolute"}));
    app.add_option("--ratings", ratings_path, "Rating table for bid-based methods")
        ->check(CLI::ExistingFile);
    app.add_option("--injected", injected_path, "Matrix file supplying the cells for --method injected")
        ->check(CLI::ExistingFile);
  }

  SimilarityMethod resolve() const {
    if (method == "bid") return BidOnly{};
    if (method == "combined") return Combined{*parse_topic_measure(topic_method), BidScale{}};
    if (method == "injected") {
      if (injected_path.empty()) throw ConfigError("--method injected needs --injected");
      Injected inj;
      with_input_file(injected_path,
                      [&](std::istream& in) { inj.source = read_matrix(in, injected_path); });
      return inj;
    }
    return *parse_topic_measure(method);
  }

  std::optional<RatingTable> ratings() const {
    if (ratings_path.empty()) return std::nullopt;
    RatingTable table;
    with_input_file(ratings_path,
                    [&](std::istream& in) { table = read_ratings(in, ratings_path); });
    return table;
  }

  SimilarityMatrix build(const Dataset& dataset) const {
    const auto table = ratings();
    return build_similarity_matrix(dataset, resolve(), table ? &*table : nullptr);
  }
};

// ---------------------------------------------------------------- gen

int cmd_gen(const GenConfig& config, const std::string& out_path,
            const std::string& truth_path, const Sinks& sinks) {
  const auto data = generate_dataset(config);
  Sinks{sinks.out, sinks.err, out_path}.write(
      [&](std::ostream& os) { write_dataset(os, data.dataset); });
  if (!truth_path.empty()) {
    Sinks{sinks.out, sinks.err, truth_path}.write(
        [&](std::ostream& os) { write_truth(os, data.truth); });
  }
  std::ostream& report = sinks.report();
  report << "generated " << data.dataset.papers.size() << " papers, "
         << data.dataset.reviewers.size() << " reviewers, "
         << data.dataset.vocabulary.size() << " topics (seed " << config.seed << ")\n";
  return 0;
}

// ---------------------------------------------------------------- similarity

int cmd_similarity(const RunConfig& config, const MethodOptions& method, const Sinks& sinks) {
  const Dataset dataset = load_dataset(config.dataset_path);
  if (!check_dataset(dataset, sinks.err)) return 1;
  const SimilarityMatrix matrix = method.build(dataset);
  sinks.write([&](std::ostream& os) { write_matrix(os, matrix); });

  std::ostream& report = sinks.report();
  json summary = {{"command", "similarity"},
                  {"method", method.method},
                  {"papers", matrix.num_papers()},
                  {"reviewers", matrix.num_reviewers()}};
  report << "paper\tcandidates\n";
  json counts = json::object();
  for (std::size_t p = 0; p < matrix.num_papers(); ++p) {
    const auto n = matrix.candidate_count(p);
    report << matrix.paper_ids()[p] << '\t' << n << '\n';
    counts[matrix.paper_ids()[p]] = n;
  }
  summary["candidates"] = counts;
  report << summary.dump() << '\n';
  return 0;
}

// ---------------------------------------------------------------- assign

AssignmentOutcome run_algorithm(Algorithm algorithm, const SimilarityMatrix& matrix, int m,
                                std::span<const int> capacities) {
  switch (algorithm) {
    case Algorithm::kHungarian: return assign_hungarian(matrix, m, capacities);
    case Algorithm::kMultipass: return assign_hungarian_multipass(matrix, m, capacities);
    case Algorithm::kGreedy: return assign_greedy(matrix, m, capacities);
    case Algorithm::kHeuristic: return assign_heuristic(matrix, m, capacities);
    case Algorithm::kAll: break;
  }
  throw std::logic_error("no single algorithm for 'all'");
}

int cmd_assign(const RunConfig& config, const MethodOptions& method,
               std::optional<int> uniform_capacity, const Sinks& sinks) {
  bool infeasible = false;
  std::optional<Dataset> dataset;
  if (!config.dataset_path.empty()) {
    dataset = load_dataset(config.dataset_path);
    if (!check_dataset(*dataset, sinks.err, &infeasible)) return 1;
  }

  SimilarityMatrix matrix;
  if (!config.matrix_path.empty()) {
    with_input_file(config.matrix_path,
                    [&](std::istream& in) { matrix = read_matrix(in, config.matrix_path); });
  } else {
    matrix = method.build(*dataset);
  }
  if (matrix.num_reviewers() == 0) {
    sinks.err << "error: no reviewers\n";
    return 1;
  }

  std::vector<int> capacities(matrix.num_reviewers(), uniform_capacity.value_or(1));
  if (dataset && !uniform_capacity) {
    for (std::size_t r = 0; r < matrix.num_reviewers(); ++r) {
      auto idx = dataset->reviewer_index(matrix.reviewer_ids()[r]);
      if (!idx) {
        sinks.err << "error: matrix reviewer '" << matrix.reviewer_ids()[r]
                  << "' is not in the dataset\n";
        return 1;
      }
      capacities[r] = dataset->reviewers[*idx].capacity;
    }
  }
  const int m = config.reviewers_per_paper;
  const long long total_capacity = std::accumulate(capacities.begin(), capacities.end(), 0LL);
  const long long required = static_cast<long long>(m) * static_cast<long long>(matrix.num_papers());
  if (total_capacity < required && !infeasible) {
    sinks.err << "warning: sum of capacities " << total_capacity << " < " << required
              << " (m * papers)\n";
    infeasible = true;
  }

  std::vector<Algorithm> algorithms;
  if (config.algorithm == Algorithm::kAll) {
    algorithms = {Algorithm::kHungarian, Algorithm::kMultipass, Algorithm::kGreedy,
                  Algorithm::kHeuristic};
  } else {
    algorithms = {config.algorithm};
  }

  std::vector<AssignmentOutcome> outcomes;
  std::vector<double> times;
  for (auto a : algorithms) {
    const auto start = Clock::now();
    outcomes.push_back(run_algorithm(a, matrix, m, capacities));
    times.push_back(elapsed_ms(start));
  }

  sinks.write([&](std::ostream& os) {
    os << "# revassign assignment\n";
    for (const auto& o : outcomes) write_assignment(os, o);
  });

  std::ostream& report = sinks.report();
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %12s %7s %8s %10s %10s\n", "algorithm", "weight",
                "pairs", "covered", "uncovered", "ms");
  report << line;
  json runs = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    std::snprintf(line, sizeof(line), "%-10s %12.6f %7zu %8zu %10zu %10.3f\n",
                  o.algorithm.c_str(), o.total_weight, o.assignment.pairs.size(),
                  o.covered_papers(matrix.num_papers()), o.uncovered.size(), times[i]);
    report << line;
    runs.push_back({{"algorithm", o.algorithm},
                    {"total_weight", o.total_weight},
                    {"pairs", o.assignment.pairs.size()},
                    {"covered", o.covered_papers(matrix.num_papers())},
                    {"uncovered", o.uncovered.size()},
                    {"rounds", o.rounds},
                    {"ms", times[i]}});
  }
  if (infeasible) report << "capacity infeasible: partial assignment\n";
  json summary = {{"command", "assign"},
                  {"m", m},
                  {"papers", matrix.num_papers()},
                  {"reviewers", matrix.num_reviewers()},
                  {"infeasible", infeasible},
                  {"runs", runs}};
  report << summary.dump() << '\n';
  return 0;
}

// ---------------------------------------------------------------- irm

int cmd_irm(const RunConfig& config, const std::string& truth_path, int iterations,
            double noise, const std::string& snapshot_dir, const Sinks& sinks) {
  const Dataset dataset = load_dataset(config.dataset_path);
  if (!check_dataset(dataset, sinks.err)) return 1;
  HiddenTruth truth;
  with_input_file(truth_path, [&](std::istream& in) { truth = read_truth(in, truth_path); });

  RatingTable initial;
  if (!config.ratings_path.empty()) {
    with_input_file(config.ratings_path,
                    [&](std::istream& in) { initial = read_ratings(in, config.ratings_path); });
  }
  const auto bidder = simulate_bidder(dataset, truth, noise, *config.seed);
  IrmState state = start_irm(dataset, config.sample_size, std::move(initial));

  std::ostream& report = sinks.report();
  report << "mode: " << (iterations == 1 ? "single-pass" : "multi-pass") << '\n';
  report << "iteration\texplicit\tpredicted\trmse\tneutral_rmse\tnext_sample\n";
  json rows = json::array();
  for (int it = 1; it <= iterations; ++it) {
    state = irm_iteration(dataset, std::move(state), config.sample_size, config.neighborhood,
                          bidder);
    const auto quality = evaluate_predictions(dataset, state.table, truth);
    std::size_t pending = 0;
    for (const auto& [r, papers] : state.pending) pending += papers.size();
    report << it << '\t' << state.table.explicit_count() << '\t'
           << state.table.predicted_count() << '\t' << fixed(quality.rmse) << '\t'
           << fixed(quality.neutral_rmse) << '\t' << pending << '\n';
    rows.push_back({{"iteration", it},
                    {"explicit", state.table.explicit_count()},
                    {"predicted", state.table.predicted_count()},
                    {"scored_cells", quality.cells},
                    {"rmse", quality.rmse},
                    {"neutral_rmse", quality.neutral_rmse},
                    {"next_sample", pending}});
    if (!snapshot_dir.empty()) {
      std::filesystem::create_directories(snapshot_dir);
      const auto path =
          (std::filesystem::path(snapshot_dir) / ("ratings_iter" + std::to_string(it) + ".tsv"))
              .string();
      with_output_file(path, [&](std::ostream& os) { write_ratings(os, state.table); });
    }
  }
  for (const auto& a : state.anomalies) sinks.err << "warning: " << a << '\n';
  sinks.write([&](std::ostream& os) { write_ratings(os, state.table); });

  json summary = {{"command", "irm"},
                  {"mode", iterations == 1 ? "single-pass" : "multi-pass"},
                  {"seed", *config.seed},
                  {"iterations", rows},
                  {"anomalies", state.anomalies.size()}};
  report << summary.dump() << '\n';
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchConfig {
  int instances = 200;
  GenConfig gen;
};

int cmd_bench(const BenchConfig& config, const Sinks& sinks) {
  const auto start = Clock::now();
  double ratio_sum = 0.0;
  double greedy_ratio_sum = 0.0;
  double min_ratio = 1.0;
  std::size_t heuristic_uncovered = 0;
  std::size_t greedy_uncovered = 0;
  std::size_t hungarian_uncovered = 0;
  int counted = 0;
  for (int i = 0; i < config.instances; ++i) {
    GenConfig gen = config.gen;
    gen.seed = config.gen.seed + static_cast<std::uint64_t>(i);
    const auto data = generate_dataset(gen);
    const auto matrix = build_similarity_matrix(data.dataset, TopicMeasure::kJaccard);
    const auto caps = data.dataset.capacities();
    const int m = data.dataset.reviewers_per_paper;
    const auto opt = assign_hungarian(matrix, m, caps);
    const auto heur = assign_heuristic(matrix, m, caps);
    const auto greedy = assign_greedy(matrix, m, caps);
    hungarian_uncovered += opt.uncovered.size();
    heuristic_uncovered += heur.uncovered.size();
    greedy_uncovered += greedy.uncovered.size();
    if (opt.total_weight <= 0.0) continue;
    const double ratio = heur.total_weight / opt.total_weight;
    ratio_sum += ratio;
    greedy_ratio_sum += greedy.total_weight / opt.total_weight;
    min_ratio = std::min(min_ratio, ratio);
    ++counted;
  }
  const double mean = counted ? ratio_sum / counted : 1.0;
  const double greedy_mean = counted ? greedy_ratio_sum / counted : 1.0;
  const double ms = elapsed_ms(start);

  std::ostream& report = sinks.out;
  report << "instances: " << config.instances << " (" << config.gen.papers << " papers x "
         << config.gen.reviewers << " reviewers, m=" << config.gen.reviewers_per_paper << ")\n";
  report << "heuristic / hungarian weight: mean " << fixed(mean, 4) << ", min "
         << fixed(min_ratio, 4) << '\n';
  report << "greedy / hungarian weight:    mean " << fixed(greedy_mean, 4) << '\n';
  report << "uncovered papers (total): hungarian " << hungarian_uncovered << ", heuristic "
         << heuristic_uncovered << ", greedy " << greedy_uncovered << '\n';
  report << "wall time: " << fixed(ms, 1) << " ms\n";
  json summary = {{"command", "bench"},
                  {"instances", config.instances},
                  {"papers", config.gen.papers},
                  {"reviewers", config.gen.reviewers},
                  {"m", config.gen.reviewers_per_paper},
                  {"seed", config.gen.seed},
                  {"mean_ratio_heuristic", mean},
                  {"min_ratio_heuristic", min_ratio},
                  {"mean_ratio_greedy", greedy_mean},
                  {"uncovered_hungarian", hungarian_uncovered},
                  {"uncovered_heuristic", heuristic_uncovered},
                  {"uncovered_greedy", greedy_uncovered},
                  {"ms", ms}};
  report << summary.dump() << '\n';
  return 0;
}

void add_gen_options(CLI::App& app, GenConfig& gen, bool seed_required) {
  auto* seed = app.add_option("--seed", gen.seed, "Random seed");
  if (seed_required) seed->required();
  app.add_option("--papers", gen.papers, "Number of papers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--reviewers", gen.reviewers, "Number of reviewers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--topics", gen.topics, "Number of conference topics")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--density", gen.density, "Probability of selecting each topic, in (0, 1]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0))
      ->check(CLI::Validator(
          [](std::string& s) {
            return std::stod(s) > 0.0 ? std::string() : std::string("density must be > 0");
          },
          "(0,1]"));
  app.add_option("--m", gen.reviewers_per_paper, "Reviewers per paper")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--capacity", gen.capacity,
                 "Capacity of every reviewer (default ceil(m*papers/reviewers)+1)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--conflict-rate", gen.conflict_rate, "Probability of a conflict per cell")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  app.add_flag("--binary", gen.binary, "Unweighted topic selections");
  app.add_option("--truth-noise", gen.truth_noise,
                 "Std deviation between declared and hidden expertise")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

GeneratedData generate_dataset(const GenConfig& config) {
  if (config.papers < 1 || config.reviewers < 1 || config.topics < 1) {
    throw std::invalid_argument("sizes must be at least 1");
  }
  if (!(config.density > 0.0 && config.density <= 1.0)) {
    throw std::invalid_argument("density must be in (0, 1]");
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> level(0, kWeightLevels.size() - 1);
  std::uniform_int_distribution<int> any_topic(0, config.topics - 1);

  auto draw_selection = [&] {
    TopicSelection s;
    for (int t = 0; t < config.topics; ++t) {
      if (config.density >= 1.0 || unit(rng) < config.density) {
        s.set(static_cast<TopicId>(t), config.binary ? 1.0 : kWeightLevels[level(rng)]);
      }
    }
    if (s.empty()) {
      s.set(static_cast<TopicId>(any_topic(rng)),
            config.binary ? 1.0 : kWeightLevels[level(rng)]);
    }
    return s;
  };

  GeneratedData data;
  auto& ds = data.dataset;
  std::vector<std::string> labels;
  for (int t = 0; t < config.topics; ++t) labels.push_back(padded_id('t', t, config.topics));
  ds.vocabulary = TopicVocabulary(std::move(labels));
  ds.reviewers_per_paper = config.reviewers_per_paper;

  for (int p = 0; p < config.papers; ++p) {
    ds.papers.push_back({padded_id('p', p, config.papers), draw_selection()});
  }
  const int capacity =
      config.capacity > 0
          ? config.capacity
          : static_cast<int>((static_cast<long long>(config.reviewers_per_paper) * config.papers +
                              config.reviewers - 1) /
                             config.reviewers) +
                1;
  std::normal_distribution<double> jitter(0.0, config.truth_noise);
  for (int r = 0; r < config.reviewers; ++r) {
    ReviewerDescriptor rd;
    rd.id = padded_id('r', r, config.reviewers);
    rd.topics = draw_selection();
    rd.capacity = capacity;
    if (config.conflict_rate > 0.0) {
      for (const auto& p : ds.papers) {
        if (unit(rng) < config.conflict_rate) rd.conflicts.insert(p.id);
      }
    }
    TopicSelection hidden;
    for (const auto& [id, w] : rd.topics.entries()) {
      const double noisy = config.truth_noise > 0.0 ? w + jitter(rng) : w;
      hidden.set(id, std::clamp(std::round(noisy * 100.0) / 100.0, 0.05, 1.0));
    }
    data.truth.emplace(rd.id, std::move(hidden));
    ds.reviewers.push_back(std::move(rd));
  }
  return data;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"revassign: reviewer-to-paper assignment"};
  app.require_subcommand(1);

  // gen
  GenConfig gen;
  std::string gen_out = "-";
  std::string gen_truth;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset");
  add_gen_options(*gen_cmd, gen, /*seed_required=*/true);
  gen_cmd->add_option("--out", gen_out, "Dataset file ('-' for stdout)")->capture_default_str();
  gen_cmd->add_option("--truth", gen_truth, "Also write hidden reviewer expertise here");

  // similarity
  RunConfig sim_config;
  MethodOptions sim_method;
  auto* sim_cmd = app.add_subcommand("similarity", "Compute the similarity matrix");
  sim_cmd->add_option("--dataset", sim_config.dataset_path, "Dataset file ('-' for stdin)")
      ->required();
  sim_method.add_to(*sim_cmd);
  sim_cmd->add_option("--out", sim_config.output_path, "Matrix file ('-' for stdout)")
      ->capture_default_str();

  // assign
  RunConfig assign_config;
  MethodOptions assign_method;
  std::string algorithm_name = "hungarian";
  std::optional<int> assign_m;
  std::optional<int> uniform_capacity;
  auto* assign_cmd = app.add_subcommand("assign", "Assign reviewers to papers");
  auto* dataset_opt =
      assign_cmd->add_option("--dataset", assign_config.dataset_path, "Dataset file");
  auto* matrix_opt = assign_cmd->add_option("--matrix", assign_config.matrix_path,
                                            "Similarity matrix file (instead of computing one)");
  assign_cmd->callback([&] {
    if (dataset_opt->count() == 0 && matrix_opt->count() == 0) {
      throw CLI::RequiredError("--dataset or --matrix");
    }
  });
  assign_method.add_to(*assign_cmd);
  assign_cmd->add_option("--m", assign_m, "Reviewers per paper (default: dataset value or 3)")
      ->check(CLI::PositiveNumber);
  assign_cmd->add_option("--capacity", uniform_capacity,
                         "Capacity of every reviewer (default: dataset value, else 1)")
      ->check(CLI::PositiveNumber);
  assign_cmd->add_option("--algorithm", algorithm_name, "hungarian, multipass, greedy, heuristic or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"hungarian", "multipass", "greedy", "heuristic", "all"}));
  assign_cmd->add_option("--out", assign_config.output_path, "Assignment file ('-' for stdout)")
      ->capture_default_str();

  // irm
  RunConfig irm_config;
  std::uint64_t irm_seed = 0;
  int iterations = 0;
  double noise = 0.1;
  std::string truth_path;
  std::string snapshot_dir;
  auto* irm_cmd = app.add_subcommand("irm", "Simulate iterative rating with predicted bids");
  irm_cmd->add_option("--dataset", irm_config.dataset_path, "Dataset file")->required();
  irm_cmd->add_option("--truth", truth_path, "Hidden expertise of the simulated reviewers")
      ->required()
      ->check(CLI::ExistingFile);
  irm_cmd->add_option("--iterations", iterations, "Rating rounds (1 = single pass)")
      ->required()
      ->check(CLI::PositiveNumber);
  irm_cmd->add_option("--k", irm_config.sample_size, "Papers proposed per reviewer and round")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  irm_cmd->add_option("--n", irm_config.neighborhood, "Neighbourhood size of the predictor")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  irm_cmd->add_option("--noise", noise, "Probability of a random bid")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  irm_cmd->add_option("--seed", irm_seed, "Random seed")->required();
  irm_cmd->add_option("--ratings", irm_config.ratings_path, "Starting rating table")
      ->check(CLI::ExistingFile);
  irm_cmd->add_option("--snapshots", snapshot_dir, "Directory for per-iteration rating tables");
  irm_cmd->add_option("--out", irm_config.output_path, "Final rating table ('-' for stdout)")
      ->capture_default_str();

  // bench
  BenchConfig bench;
  bench.gen.papers = 50;
  bench.gen.reviewers = 30;
  bench.gen.topics = 12;
  bench.gen.density = 0.25;
  bench.gen.reviewers_per_paper = 1;
  bench.gen.binary = true;
  auto* bench_cmd = app.add_subcommand("bench", "Compare heuristic and greedy against Hungarian");
  bench_cmd->add_option("--instances", bench.instances, "Number of random instances")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_gen_options(*bench_cmd, bench.gen, /*seed_required=*/true);

  std::vector<std::string> argv_storage{"revassign"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  auto for_path = [&](const std::string& path) { return Sinks{out, err, path}; };
  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, gen_out, gen_truth, for_path(gen_out));
    if (sim_cmd->parsed()) {
      sim_config.method = sim_method.resolve();
      return cmd_similarity(sim_config, sim_method, for_path(sim_config.output_path));
    }
    if (assign_cmd->parsed()) {
      static const std::map<std::string, Algorithm> kAlgorithms = {
          {"hungarian", Algorithm::kHungarian},
          {"multipass", Algorithm::kMultipass},
          {"greedy", Algorithm::kGreedy},
          {"heuristic", Algorithm::kHeuristic},
          {"all", Algorithm::kAll}};
      assign_config.algorithm = kAlgorithms.at(algorithm_name);
      if (assign_m) {
        assign_config.reviewers_per_paper = *assign_m;
      } else if (!assign_config.dataset_path.empty()) {
        assign_config.reviewers_per_paper = load_dataset(assign_config.dataset_path).reviewers_per_paper;
      }
      return cmd_assign(assign_config, assign_method, uniform_capacity,
                        for_path(assign_config.output_path));
    }
    if (irm_cmd->parsed()) {
      irm_config.seed = irm_seed;
      return cmd_irm(irm_config, truth_path, iterations, noise, snapshot_dir,
                     for_path(irm_config.output_path));
    }
    if (bench_cmd->parsed()) return cmd_bench(bench, for_path("-"));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace revassign::cli
