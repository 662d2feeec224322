#include "perclab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include "perclab/decomposition.hpp"
#include "perclab/errors.hpp"
#include "perclab/expansion.hpp"
#include "perclab/pairing_model.hpp"
#include "perclab/percolation.hpp"

namespace perclab {

namespace {

constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kDeletionStream = 2;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw FormatError("bad boolean for " + key + ": " + v);
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream in(v);
  T out{};
  if (!(in >> out) || !(in >> std::ws).eof()) throw FormatError("bad value for " + key + ": " + v);
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n == 0) throw DomainError("n must be positive");
  if (d == 0) throw DomainError("d must be positive");
  if ((n * d) % 2 != 0) throw DomainError("n * d must be even");
  if (trials == 0) throw DomainError("trials must be at least 1");
  if (workers == 0) throw DomainError("workers must be at least 1");
  if (alpha && p) throw DomainError("give alpha or p, not both");
  if (!alpha && !p) throw DomainError("one of alpha or p is required");
  const double q = deletion_probability();
  if (!(q > 0 && q < 1)) throw DomainError("deletion probability outside (0,1)");
  if (!K_override) {
    if (d < 3) throw DomainError("K needs d >= 3; set K_override");
    if (!effective_eta()) throw DomainError("K needs eta or alpha; set K_override");
  } else if (*K_override == 0) {
    throw DomainError("K_override must be positive");
  }
}

double ExperimentConfig::deletion_probability() const {
  if (alpha) return std::pow(static_cast<double>(n), -*alpha);
  return p.value_or(0.0);
}

std::optional<double> ExperimentConfig::effective_eta() const { return eta ? eta : alpha; }

std::uint32_t ExperimentConfig::size_bound() const {
  if (K_override) return *K_override;
  return theory::bush_bound_K(d, effective_eta().value());
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n") c.n = parse_number<std::size_t>(key, value);
    else if (key == "d") c.d = parse_number<std::uint32_t>(key, value);
    else if (key == "alpha") c.alpha = parse_number<double>(key, value);
    else if (key == "p") c.p = parse_number<double>(key, value);
    else if (key == "eta") c.eta = parse_number<double>(key, value);
    else if (key == "trials") c.trials = parse_number<std::size_t>(key, value);
    else if (key == "base_seed") c.base_seed = parse_number<Seed>(key, value);
    else if (key == "mode") {
      if (value == "simple-graph") c.mode = GraphMode::simple_graph;
      else if (value == "multigraph") c.mode = GraphMode::multigraph;
      else throw FormatError("mode must be simple-graph or multigraph");
    } else if (key == "exhaustive_expansion") c.exhaustive_expansion = parse_bool(key, value);
    else if (key == "K_override") c.K_override = parse_number<std::uint32_t>(key, value);
    else if (key == "workers") c.workers = parse_number<std::size_t>(key, value);
    else if (key == "record_timing") c.record_timing = parse_bool(key, value);
    else if (key == "csv_path") c.csv_path = value;
    else if (key == "report_path") c.report_path = value;
    else throw FormatError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.trial = trial_index;
  rec.seed = config.base_seed + trial_index;
  rec.n = config.n;
  rec.d = config.d;
  rec.alpha = config.alpha;
  rec.p = config.deletion_probability();

  Configuration original;
  const Seed graph_seed = derive_seed(rec.seed, kGraphStream);
  if (config.mode == GraphMode::simple_graph) {
    auto sample = sample_simple_regular(config.n, config.d, graph_seed);
    rec.sampling_attempts = sample.attempts;
    original = std::move(sample.config);
  } else {
    original = sample_configuration(DegreeSequence::regular(config.n, config.d), graph_seed);
    rec.sampling_attempts = 1;
  }

  Rng deletion_rng = make_rng(derive_seed(rec.seed, kDeletionStream));
  const auto deleted = choose_deletion_set(config.n, rec.p, deletion_rng);
  const auto outcome = apply_deletion(original, deleted);
  rec.r = outcome.r();
  rec.census = outcome.census;
  if (config.alpha) {
    rec.mu = theory::mu_all(static_cast<double>(config.n), config.d, *config.alpha);
  }
  rec.survivor_pairs = outcome.survivors.pair_count();

  const Multigraph ghat = project(outcome.survivors);
  const std::size_t K = config.size_bound();
  const Decomposition dec = decompose(ghat, K);
  const ComponentReport& comps = dec.components;
  rec.giant_size = comps.giant_size();
  rec.component_count = comps.components.size();
  rec.isolated_tree_count = comps.isolated_trees;
  rec.max_isolated_tree_size = comps.max_tree_size;
  rec.max_bush_size = dec.max_bush_size();
  rec.isolated_cycle_count = dec.kernel.isolated_cycles.size();
  rec.two_core_size = dec.core.core.num_vertices();
  rec.two_core_edges = dec.core.core.num_edges();
  rec.core_census = dec.core_census;
  rec.core_census.resize(std::max<std::size_t>(rec.core_census.size(), config.d + 1), 0);
  rec.kernel_size = dec.kernel.kernel.num_vertices();
  rec.longest_deg2_run = dec.longest_run.length;
  rec.connected = comps.components.size() <= 1;
  rec.others_isolated_vertices = comps.others_are_isolated_vertices;
  rec.others_are_trees = comps.isolated_cycles == 0 && comps.other_components == 0;

  const std::size_t survivors = ghat.num_vertices();
  if (config.exhaustive_expansion && survivors >= 2 && survivors <= kExhaustiveLimit) {
    CertifyOptions opts;
    opts.spectral.seed = rec.seed;
    const auto cert = certify(ghat, opts);
    rec.beta_exact = cert.exact_beta->ratio.value();
    for (Vertex v : cert.exact_beta->witness) rec.beta_witness.push_back(v + 1);
    rec.gamma_exact = cert.exact_gamma->ratio.value();
    if (cert.lower_bound) rec.beta_lower = cert.lower_bound->value;
    if (cert.upper_bound) {
      rec.beta_upper = cert.upper_bound->value;
      rec.beta_upper_source = cert.upper_bound->source;
    }
    rec.lambda2 = cert.lambda2;
    if (cert.diameter) {
      rec.diameter = cert.diameter->diameter;
      rec.diameter_bound = cert.diameter->bound;
      rec.diameter_pass = cert.diameter->pass;
    }
  } else if (config.exhaustive_expansion && rec.giant_size >= 2) {
    std::vector<bool> keep(survivors, false);
    for (Vertex v : comps.components[*comps.giant].vertices) keep[v] = true;
    const auto giant = induced_subgraph(ghat, keep);
    CertifyOptions opts;
    opts.exact = false;
    opts.diameter = false;
    opts.spectral.seed = rec.seed;
    const auto cert = certify(giant.graph, opts);
    if (cert.lower_bound) rec.beta_lower = cert.lower_bound->value;
    if (cert.upper_bound) {
      rec.beta_upper = cert.upper_bound->value;
      rec.beta_upper_source = cert.upper_bound->source;
    }
    rec.lambda2 = cert.lambda2;
  } else if (auto bound = path_upper_bound(rec.longest_deg2_run, rec.two_core_size)) {
    rec.beta_upper = *bound;
    rec.beta_upper_source = "degree-2 run formula (2-core)";
  }

  if (config.record_timing) {
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start).count();
  }
  return rec;
}

const FieldSummary* AggregateReport::field(const std::string& name) const {
  for (const auto& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const Indicator* AggregateReport::indicator(const std::string& name) const {
  for (const auto& i : indicators) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

AggregateReport aggregate(const ExperimentConfig& config, std::vector<TrialRecord> records) {
  AggregateReport report;
  report.config = config;
  report.trials = records.size();
  const std::size_t K = config.size_bound();
  const double n = static_cast<double>(config.n);
  const double vertex_cap = config.d >= 2 ? theory::isolated_vertex_cap(n, config.d) : 0.0;

  // std::map keeps field order stable; the vector below fixes output order.
  std::vector<std::string> order;
  std::map<std::string, stats::Accumulator> acc;
  auto add = [&](const std::string& name, double x) {
    if (!acc.count(name)) order.push_back(name);
    acc[name].add(x);
  };
  std::vector<std::string> ind_order;
  std::map<std::string, std::size_t> hits;
  std::size_t ok = 0;
  auto flag = [&](const std::string& name, bool value) {
    if (!hits.count(name)) ind_order.push_back(name);
    hits[name] += value ? 1 : 0;
  };
  std::vector<stats::Accumulator> ratio(config.d + 1);

  for (const TrialRecord& rec : records) {
    if (!rec.error.empty()) {
      ++report.failed_trials;
      report.failures.push_back("trial " + std::to_string(rec.trial) + ": " + rec.error);
      continue;
    }
    ++ok;
    const double alive = static_cast<double>(rec.n - rec.r);
    add("r", static_cast<double>(rec.r));
    for (std::size_t j = 0; j < rec.census.size(); ++j) {
      add("N_" + std::to_string(j), static_cast<double>(rec.census[j]));
      if (!rec.mu.empty()) ratio[j].add(static_cast<double>(rec.census[j]) / rec.mu[j]);
    }
    add("giant_size", static_cast<double>(rec.giant_size));
    add("giant_fraction", alive > 0 ? rec.giant_size / alive : 0.0);
    add("component_count", static_cast<double>(rec.component_count));
    add("isolated_tree_count", static_cast<double>(rec.isolated_tree_count));
    add("max_isolated_tree_size", static_cast<double>(rec.max_isolated_tree_size));
    add("max_bush_size", static_cast<double>(rec.max_bush_size));
    add("isolated_cycle_count", static_cast<double>(rec.isolated_cycle_count));
    add("two_core_size", static_cast<double>(rec.two_core_size));
    add("two_core_fraction", alive > 0 ? rec.two_core_size / alive : 0.0);
    for (std::size_t j = 2; j < rec.core_census.size(); ++j) {
      add("Ncore_" + std::to_string(j), static_cast<double>(rec.core_census[j]));
    }
    add("kernel_size", static_cast<double>(rec.kernel_size));
    add("longest_deg2_run", static_cast<double>(rec.longest_deg2_run));
    add("sampling_attempts", static_cast<double>(rec.sampling_attempts));
    if (rec.beta_exact) add("beta_exact", *rec.beta_exact);
    if (rec.gamma_exact) add("gamma_exact", *rec.gamma_exact);
    if (rec.beta_lower) add("beta_lower", *rec.beta_lower);
    if (rec.beta_upper) add("beta_upper", *rec.beta_upper);
    if (rec.lambda2) add("lambda2", *rec.lambda2);
    if (rec.diameter) add("diameter", static_cast<double>(*rec.diameter));

    flag("connected", rec.connected);
    flag("giant_at_least_99pct", rec.giant_size >= 0.99 * alive);
    flag("others_are_trees", rec.others_are_trees);
    flag("trees_within_K", rec.max_isolated_tree_size <= K);
    flag("bushes_within_K", rec.max_bush_size <= K);
    flag("core_at_least_98pct", rec.two_core_size >= 0.98 * alive);
    flag("no_isolated_cycles", rec.isolated_cycle_count == 0);
    flag("runs_within_K", rec.longest_deg2_run <= K);
    flag("N0_zero", !rec.census.empty() && rec.census[0] == 0);
    flag("N0_under_cap", !rec.census.empty() && rec.census[0] <= vertex_cap);
    flag("others_isolated_vertices", rec.others_isolated_vertices);
    if (rec.diameter_pass) flag("diameter_bound_holds", *rec.diameter_pass);
  }
  for (const auto& name : order) {
    const auto& a = acc[name];
    report.fields.push_back({name, a.count(), a.mean(), a.variance()});
  }
  for (const auto& name : ind_order) {
    report.indicators.push_back({name, ok ? static_cast<double>(hits[name]) / ok : 0.0});
  }
  if (config.alpha && ok > 0) {
    for (const auto& r : ratio) report.census_to_mu.push_back(r.mean());
  }
  if (config.alpha && config.d >= 3) {
    const double eta = config.effective_eta().value();
    if (eta > 0 && *config.alpha >= eta) {
      report.predicted = theory::predict({n, config.d, *config.alpha, eta});
    }
  }
  report.records = std::move(records);
  return report;
}

AggregateReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<TrialRecord> records(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      try {
        records[i] = run_trial(config, i);
      } catch (const std::exception& e) {
        TrialRecord failed;
        failed.trial = i;
        failed.seed = config.base_seed + i;
        failed.n = config.n;
        failed.d = config.d;
        failed.alpha = config.alpha;
        failed.p = config.deletion_probability();
        failed.error = e.what();
        records[i] = std::move(failed);
      }
    }
  };
  const std::size_t threads = std::min(config.workers, config.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return aggregate(config, std::move(records));
}

UniformityReport uniformity_suite(Seed seed, const UniformityOptions& options) {
  UniformityReport report;
  Rng rng = make_rng(seed);

  // Plain matchings.
  {
    const auto seq = DegreeSequence::regular(options.match_n, options.match_d);
    const auto all = enumerate_matchings(seq);
    std::map<std::vector<PointId>, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) {
      index.emplace(std::vector<PointId>(all[i].partners().begin(), all[i].partners().end()), i);
    }
    std::vector<std::uint64_t> counts(all.size(), 0);
    for (std::uint64_t s = 0; s < options.match_samples; ++s) {
      const auto c = sample_configuration(seq, rng);
      ++counts[index.at(std::vector<PointId>(c.partners().begin(), c.partners().end()))];
    }
    report.matching_samples = options.match_samples;
    report.matching_categories = all.size();
    report.matching_test = stats::chi_square_uniform(counts);
  }

  // Percolated pairings grouped by degree sequence.
  {
    const auto seq = DegreeSequence::regular(options.cond_n, options.cond_d);
    std::map<std::vector<std::uint32_t>, std::map<std::vector<PointId>, std::uint64_t>> groups;
    for (std::uint64_t s = 0; s < options.cond_samples; ++s) {
      const auto c = sample_configuration(seq, rng);
      std::vector<Bucket> deleted;
      for (Bucket b = 0; b < options.cond_n; ++b) {
        if (bernoulli(rng, options.cond_p)) deleted.push_back(b);
      }
      const auto out = apply_deletion(c, deleted);
      const auto& degs = out.survivors.degree_sequence().degrees();
      ++groups[std::vector<std::uint32_t>(degs.begin(), degs.end())]
              [std::vector<PointId>(out.survivors.partners().begin(), out.survivors.partners().end())];
    }
    report.conditional_samples = options.cond_samples;
    for (const auto& [degrees, seen] : groups) {
      ConditionalUniformity entry;
      entry.degrees = degrees;
      const DegreeSequence group_seq(degrees);
      std::uint64_t total = 0;
      for (const auto& [key, count] : seen) total += count;
      entry.samples = total;
      if (group_seq.total_points() == 0) {
        entry.matchings = 1;
        entry.note = "no points; trivially uniform";
      } else {
        const auto all = enumerate_matchings(group_seq);
        entry.matchings = all.size();
        if (all.size() == 1) {
          entry.note = "unique matching; trivially uniform";
        } else if (static_cast<double>(total) < options.min_expected * all.size()) {
          entry.note = "too few samples for a chi-square test";
        } else {
          std::vector<std::uint64_t> counts;
          for (const auto& m : all) {
            const std::vector<PointId> key(m.partners().begin(), m.partners().end());
            const auto it = seen.find(key);
            counts.push_back(it == seen.end() ? 0 : it->second);
          }
          entry.test = stats::chi_square_uniform(counts);
          report.min_conditional_p = std::min(report.min_conditional_p, entry.test->p_value);
        }
      }
      report.conditional.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace perclab
