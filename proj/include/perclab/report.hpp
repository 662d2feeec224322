#pragma once

// Report writers: plot-ready CSV of trial records and JSON documents for
// experiments, decompositions, certificates and predictions.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "perclab/decomposition.hpp"
#include "perclab/expansion.hpp"
#include "perclab/experiment.hpp"
#include "perclab/theory.hpp"

namespace perclab {

// n,d,alpha,seed,r,N_0..N_d,mu_0..mu_d,giant_size,two_core_size,
// longest_deg2_run,max_tree_size,isolated_cycles,connected,beta_exact,
// beta_lower,beta_upper,lambda2,diameter,runtime_ms
std::vector<std::string> csv_columns(std::uint32_t d);
// Missing values are empty cells. No records gives a header-only file.
void write_csv(std::ostream& out, std::span<const TrialRecord> records, std::uint32_t d);

nlohmann::json to_json(const theory::Predictions& p);
theory::Predictions predictions_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TrialRecord& r);
TrialRecord record_from_json(const nlohmann::json& j);

// Field names mirror TrialRecord; predictions sit under "predicted".
nlohmann::json to_json(const AggregateReport& report);
AggregateReport report_from_json(const nlohmann::json& j);

// Vertex labels in these two documents are 1-based.
nlohmann::json to_json(const Decomposition& dec);
nlohmann::json to_json(const ExpansionCertificate& cert);

// Writes csv_path and report_path (defaults results.csv, report.json) under
// dir. Throws Error naming the path on I/O failure.
void emit_report(const AggregateReport& report, const std::filesystem::path& dir);

// Whole-file helpers with path context in the error message.
void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace perclab
