#pragma once

// Monte Carlo runner: sample a random regular graph, percolate it, decompose
// the survivor and record everything the predictions talk about.
//
// Trial i uses seed base_seed + i. Within a trial the graph is drawn from
// sub-stream 1 of that seed and the deletion set from sub-stream 2, so a
// trial's record depends only on (config, i) and never on scheduling.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "perclab/rng.hpp"
#include "perclab/stats.hpp"
#include "perclab/theory.hpp"

namespace perclab {

enum class GraphMode { simple_graph, multigraph };

struct ExperimentConfig {
  std::size_t n = 1000;
  std::uint32_t d = 4;
  std::optional<double> alpha;
  std::optional<double> p;          // used when alpha is absent
  std::optional<double> eta;        // defaults to alpha
  std::size_t trials = 1;
  Seed base_seed = 1;
  GraphMode mode = GraphMode::simple_graph;
  // Exact beta/gamma and diameter when n - r <= 20; spectral and explicit-set
  // bounds on the giant component otherwise. When false only the cheap
  // degree-2-run upper bound is recorded.
  bool exhaustive_expansion = false;
  std::optional<std::uint32_t> K_override;
  std::size_t workers = 1;
  bool record_timing = true;        // runtime_ms is written as 0 when false
  std::string csv_path;             // output paths, relative to the output directory
  std::string report_path;

  // Throws DomainError on inconsistent settings.
  void validate() const;
  double deletion_probability() const;
  std::optional<double> effective_eta() const;
  std::uint32_t size_bound() const;  // K
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Flat "key = value" text; '#' starts a comment. Keys are the field names
// above; mode is "simple-graph" or "multigraph".
ExperimentConfig parse_config(std::istream& in);

struct TrialRecord {
  std::size_t trial = 0;
  Seed seed = 0;
  std::size_t n = 0;
  std::uint32_t d = 0;
  std::optional<double> alpha;
  double p = 0;
  std::uint64_t sampling_attempts = 0;
  std::size_t r = 0;
  std::vector<std::uint64_t> census;   // N_0..N_d
  std::vector<double> mu;              // mu_0..mu_d, empty without alpha
  std::size_t survivor_pairs = 0;
  std::size_t giant_size = 0;
  std::size_t component_count = 0;
  std::size_t isolated_tree_count = 0;
  std::size_t max_isolated_tree_size = 0;
  std::size_t max_bush_size = 0;
  std::size_t isolated_cycle_count = 0;  // in the 2-core
  std::size_t two_core_size = 0;         // t
  std::size_t two_core_edges = 0;
  std::vector<std::uint64_t> core_census;  // N'_0..N'_d (entries 0 and 1 are zero)
  std::size_t kernel_size = 0;
  std::size_t longest_deg2_run = 0;
  bool connected = false;
  bool others_isolated_vertices = false;
  bool others_are_trees = false;          // every non-giant component is a tree
  std::optional<double> beta_exact;
  std::vector<std::uint32_t> beta_witness;  // 1-based labels
  std::optional<double> gamma_exact;
  std::optional<double> beta_lower;
  std::optional<double> beta_upper;
  std::optional<std::string> beta_upper_source;
  std::optional<double> lambda2;
  std::optional<std::size_t> diameter;
  std::optional<double> diameter_bound;
  std::optional<bool> diameter_pass;
  double runtime_ms = 0;
  std::string error;  // non-empty when the trial failed

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Throws on failure; run_experiment catches and records instead.
TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index);

struct FieldSummary {
  std::string name;
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;
  friend bool operator==(const FieldSummary&, const FieldSummary&) = default;
};

struct Indicator {
  std::string name;
  double fraction = 0;  // over successful trials
  friend bool operator==(const Indicator&, const Indicator&) = default;
};

struct AggregateReport {
  ExperimentConfig config;
  std::size_t trials = 0;
  std::size_t failed_trials = 0;
  std::vector<std::string> failures;        // "trial i: message"
  std::vector<FieldSummary> fields;
  std::vector<Indicator> indicators;
  std::vector<double> census_to_mu;         // mean N_j / mu_j, empty without alpha
  std::optional<theory::Predictions> predicted;
  std::vector<TrialRecord> records;         // ordered by trial index

  const FieldSummary* field(const std::string& name) const;
  const Indicator* indicator(const std::string& name) const;
  friend bool operator==(const AggregateReport&, const AggregateReport&) = default;
};

// Runs config.trials trials on config.workers threads. The aggregate depends
// only on the config.
AggregateReport run_experiment(const ExperimentConfig& config);
AggregateReport aggregate(const ExperimentConfig& config, std::vector<TrialRecord> records);

struct ConditionalUniformity {
  std::vector<std::uint32_t> degrees;
  std::size_t matchings = 0;
  std::uint64_t samples = 0;
  std::optional<stats::ChiSquare> test;  // none: trivially uniform or too few samples
  std::string note;
};

struct UniformityReport {
  std::uint64_t matching_samples = 0;
  std::size_t matching_categories = 0;
  stats::ChiSquare matching_test;
  std::uint64_t conditional_samples = 0;
  std::vector<ConditionalUniformity> conditional;
  double min_conditional_p = 1;
};

struct UniformityOptions {
  std::size_t match_n = 3;
  std::uint32_t match_d = 2;
  std::uint64_t match_samples = 100'000;
  std::size_t cond_n = 4;
  std::uint32_t cond_d = 2;
  double cond_p = 0.5;
  std::uint64_t cond_samples = 100'000;
  // A degree sequence is tested only with at least this many samples per matching.
  double min_expected = 5.0;
};

// Chi-square of sampled matchings against uniform, and of percolated
// pairings grouped by their degree sequence against uniform over the
// matchings of that sequence.
UniformityReport uniformity_suite(Seed seed, const UniformityOptions& options = {});

}  // namespace perclab
