// perclab: command-line front end for sampling, percolation, decomposition,
// expansion certificates, predictions, experiments and the acceptance suite.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "perclab/acceptance.hpp"
#include "perclab/decomposition.hpp"
#include "perclab/errors.hpp"
#include "perclab/expansion.hpp"
#include "perclab/experiment.hpp"
#include "perclab/pairing_model.hpp"
#include "perclab/percolation.hpp"
#include "perclab/report.hpp"
#include "perclab/theory.hpp"

namespace {

using namespace perclab;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Loaded {
  Configuration config;
  std::uint32_t degree = 0;  // original d for an outcome file, else the largest bucket
};

// Accepts a configuration or a percolation outcome file.
Loaded load_configuration(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> trailing;
  Loaded out{read_configuration(in, &trailing)};
  for (std::uint32_t d : out.config.degree_sequence().degrees()) out.degree = std::max(out.degree, d);
  if (!trailing.empty()) {
    std::istringstream again(read_file(path));
    const auto outcome = read_outcome(again);
    out.degree = static_cast<std::uint32_t>(outcome.census.size() - 1);
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex percolation on random regular graphs"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a random d-regular configuration");
  std::size_t s_n = 0;
  std::uint32_t s_d = 0;
  Seed s_seed = 1;
  bool s_multi = false;
  std::string s_out, s_edges;
  sample->add_option("--n", s_n, "Number of buckets")->required();
  sample->add_option("--d", s_d, "Bucket size")->required();
  sample->add_option("--seed", s_seed, "Seed");
  sample->add_flag("--multigraph", s_multi, "Skip the rejection of loops and multiple edges");
  sample->add_option("-o,--output", s_out, "Configuration file")->required();
  sample->add_option("--edges", s_edges, "Also write the projected edge list here");

  // percolate
  auto* percolate = app.add_subcommand("percolate", "Delete each bucket independently");
  std::optional<double> p_alpha, p_p;
  Seed p_seed = 1;
  std::string p_in, p_out;
  auto* alpha_opt = percolate->add_option("--alpha", p_alpha, "Deletion probability n^-alpha");
  auto* p_opt = percolate->add_option("--p", p_p, "Explicit deletion probability");
  alpha_opt->excludes(p_opt);
  percolate->add_option("--seed", p_seed, "Seed");
  percolate->add_option("-i,--input", p_in, "Configuration file")->required()->check(CLI::ExistingFile);
  percolate->add_option("-o,--output", p_out, "Outcome file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "2-core, kernel, bushes and components");
  std::string a_in, a_out = "-";
  std::optional<std::uint32_t> a_K;
  std::optional<double> a_eta;
  analyze->add_option("-i,--input", a_in, "Configuration or outcome file")->required()->check(CLI::ExistingFile);
  analyze->add_option("-o,--output", a_out, "JSON report ('-' for stdout)");
  auto* k_opt = analyze->add_option("--K", a_K, "Size bound for trees and bushes");
  analyze->add_option("--eta", a_eta, "Derive K from eta and the input's maximum degree")->excludes(k_opt);

  // expansion
  auto* expansion = app.add_subcommand("expansion", "Expansion certificate for a configuration");
  bool e_exact = false, e_bounds = false;
  std::string e_in, e_out = "-";
  Seed e_seed = 0;
  auto* exact_flag = expansion->add_flag("--exact", e_exact, "Exhaustive beta and gamma (n <= 20)");
  expansion->add_flag("--bounds", e_bounds, "Spectral and explicit-set bounds")->excludes(exact_flag);
  expansion->add_option("-i,--input", e_in, "Configuration or outcome file")->required()->check(CLI::ExistingFile);
  expansion->add_option("-o,--output", e_out, "JSON certificate ('-' for stdout)");
  expansion->add_option("--seed", e_seed, "Seed of the Lanczos start vector");

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "Predicted quantities");
  double t_n = 0, t_alpha = 0;
  std::uint32_t t_d = 0;
  std::optional<double> t_eta;
  theory_cmd->add_option("--n", t_n, "Number of vertices")->required();
  theory_cmd->add_option("--d", t_d, "Degree")->required();
  theory_cmd->add_option("--alpha", t_alpha, "Deletion exponent")->required();
  theory_cmd->add_option("--eta", t_eta, "Exponent for K and the regime (defaults to alpha)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  std::string x_config, x_dir;
  std::optional<std::size_t> x_workers;
  experiment->add_option("--config", x_config, "key = value config file")->required()->check(CLI::ExistingFile);
  experiment->add_option("-o,--output", x_dir, "Output directory")->required();
  experiment->add_option("--workers", x_workers, "Override the worker count");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  AcceptanceOptions v_opts;
  verify->add_option("--seed", v_opts.seed, "Base seed");
  verify->add_option("--workers", v_opts.workers, "Worker threads (0: all cores)");
  verify->add_option("--only", v_opts.only, "Criterion ids to run")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sample) {
      Configuration config;
      if (s_multi) {
        config = sample_configuration(DegreeSequence::regular(s_n, s_d), s_seed);
      } else {
        config = sample_simple_regular(s_n, s_d, s_seed).config;
      }
      std::ostringstream out;
      write_configuration(out, config);
      write_file(s_out, out.str());
      if (!s_edges.empty()) {
        std::ostringstream edges;
        write_edge_list(edges, project(config));
        write_file(s_edges, edges.str());
      }
    } else if (*percolate) {
      if (!p_alpha && !p_p) throw DomainError("one of --alpha or --p is required");
      const Configuration config = load_configuration(p_in).config;
      const std::size_t n = config.num_buckets();
      const auto params = p_alpha ? DeletionParams::from_alpha(n, *p_alpha, p_seed)
                                  : DeletionParams::from_probability(n, *p_p, p_seed);
      const auto outcome = apply_deletion(config, choose_deletion_set(params));
      std::ostringstream out;
      write_outcome(out, outcome);
      write_file(p_out, out.str());
      std::cerr << "deleted " << outcome.r() << " of " << n << " buckets\n";
    } else if (*analyze) {
      const auto input = load_configuration(a_in);
      const Multigraph g = project(input.config);
      std::size_t K = g.num_vertices() ? g.num_vertices() : 1;
      if (a_K) K = *a_K;
      else if (a_eta) K = theory::bush_bound_K(input.degree, *a_eta);
      auto doc = to_json(decompose(g, K));
      doc["size_bound"] = K;
      emit(a_out, doc.dump(2) + "\n");
    } else if (*expansion) {
      const Multigraph g = project(load_configuration(e_in).config);
      CertifyOptions opts;
      opts.exact = !e_bounds;
      opts.bounds = !e_exact;
      opts.spectral.seed = e_seed;
      const auto cert = certify(g, opts);
      emit(e_out, to_json(cert).dump(2) + "\n");
    } else if (*theory_cmd) {
      const theory::ModelParams params{t_n, t_d, t_alpha, t_eta.value_or(t_alpha)};
      std::cout << to_json(theory::predict(params)).dump(2) << "\n";
    } else if (*experiment) {
      std::istringstream in(read_file(x_config));
      ExperimentConfig config = parse_config(in);
      if (x_workers) config.workers = *x_workers;
      const auto report = run_experiment(config);
      emit_report(report, x_dir);
      std::cerr << report.trials << " trials, " << report.failed_trials << " failed\n";
      for (const auto& i : report.indicators) std::cerr << "  " << i.name << ": " << i.fraction << "\n";
      return report.failed_trials ? kExitFailed : kExitOk;
    } else if (*verify) {
      const auto results = run_acceptance(v_opts, &std::cout);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.pass ? 1 : 0;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? kExitOk : kExitFailed;
    }
  } catch (const SamplingFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
