#include "perclab/report.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "perclab/errors.hpp"

namespace perclab {

using nlohmann::json;

namespace {

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) return num(*v);
  else return std::to_string(*v);
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

theory::Regime regime_from(const std::string& s) {
  if (s == "a") return theory::Regime::a;
  if (s == "b") return theory::Regime::b;
  if (s == "c") return theory::Regime::c;
  throw FormatError("unknown regime '" + s + "'");
}

json one_based(std::span<const Vertex> vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace

std::vector<std::string> csv_columns(std::uint32_t d) {
  std::vector<std::string> cols{"n", "d", "alpha", "seed", "r"};
  for (std::uint32_t j = 0; j <= d; ++j) cols.push_back("N_" + std::to_string(j));
  for (std::uint32_t j = 0; j <= d; ++j) cols.push_back("mu_" + std::to_string(j));
  for (const char* c : {"giant_size", "two_core_size", "longest_deg2_run", "max_tree_size",
                        "isolated_cycles", "connected", "beta_exact", "beta_lower", "beta_upper",
                        "lambda2", "diameter", "runtime_ms"}) {
    cols.emplace_back(c);
  }
  return cols;
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records, std::uint32_t d) {
  const auto cols = csv_columns(d);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const TrialRecord& r : records) {
    std::vector<std::string> row{std::to_string(r.n), std::to_string(r.d), cell(r.alpha),
                                 std::to_string(r.seed)};
    if (!r.error.empty()) {
      // failed trials keep their identity columns only
      row.resize(cols.size());
    } else {
      row.push_back(std::to_string(r.r));
      for (std::uint32_t j = 0; j <= d; ++j) {
        row.push_back(j < r.census.size() ? std::to_string(r.census[j]) : "");
      }
      for (std::uint32_t j = 0; j <= d; ++j) row.push_back(j < r.mu.size() ? num(r.mu[j]) : "");
      row.push_back(std::to_string(r.giant_size));
      row.push_back(std::to_string(r.two_core_size));
      row.push_back(std::to_string(r.longest_deg2_run));
      row.push_back(std::to_string(r.max_isolated_tree_size));
      row.push_back(std::to_string(r.isolated_cycle_count));
      row.push_back(r.connected ? "1" : "0");
      row.push_back(cell(r.beta_exact));
      row.push_back(cell(r.beta_lower));
      row.push_back(cell(r.beta_upper));
      row.push_back(cell(r.lambda2));
      row.push_back(cell(r.diameter));
      row.push_back(num(r.runtime_ms));
    }
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

json to_json(const theory::Predictions& p) {
  return {
      {"n", p.params.n},
      {"d", p.params.d},
      {"alpha", p.params.alpha},
      {"eta", p.params.eta},
      {"mu", p.mu},
      {"expected_r", p.expected_r.value},
      {"concentrated", p.expected_r.concentrated},
      {"K", p.K},
      {"regime", std::string(theory::to_string(p.regime))},
      {"isolated_vertex_cap", p.isolated_vertex_cap},
      {"isolated_tree_decay", p.isolated_tree_decay},
      {"mu2_bounded", p.mu2_bounded},
  };
}

theory::Predictions predictions_from_json(const json& j) {
  theory::Predictions p;
  p.params = {j.at("n").get<double>(), j.at("d").get<std::uint32_t>(),
              j.at("alpha").get<double>(), j.at("eta").get<double>()};
  p.mu = j.at("mu").get<std::vector<double>>();
  p.expected_r = {j.at("expected_r").get<double>(), j.at("concentrated").get<bool>()};
  p.K = j.at("K").get<std::uint32_t>();
  p.regime = regime_from(j.at("regime").get<std::string>());
  p.isolated_vertex_cap = j.at("isolated_vertex_cap").get<double>();
  p.isolated_tree_decay = j.at("isolated_tree_decay").get<double>();
  p.mu2_bounded = j.at("mu2_bounded").get<bool>();
  return p;
}

json to_json(const ExperimentConfig& c) {
  return {
      {"n", c.n},
      {"d", c.d},
      {"alpha", opt(c.alpha)},
      {"p", opt(c.p)},
      {"eta", opt(c.eta)},
      {"trials", c.trials},
      {"base_seed", c.base_seed},
      {"mode", c.mode == GraphMode::simple_graph ? "simple-graph" : "multigraph"},
      {"exhaustive_expansion", c.exhaustive_expansion},
      {"K_override", opt(c.K_override)},
      {"workers", c.workers},
      {"record_timing", c.record_timing},
      {"csv_path", c.csv_path},
      {"report_path", c.report_path},
  };
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.n = j.at("n").get<std::size_t>();
  c.d = j.at("d").get<std::uint32_t>();
  c.alpha = get_opt<double>(j, "alpha");
  c.p = get_opt<double>(j, "p");
  c.eta = get_opt<double>(j, "eta");
  c.trials = j.at("trials").get<std::size_t>();
  c.base_seed = j.at("base_seed").get<Seed>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "simple-graph") c.mode = GraphMode::simple_graph;
  else if (mode == "multigraph") c.mode = GraphMode::multigraph;
  else throw FormatError("unknown mode '" + mode + "'");
  c.exhaustive_expansion = j.at("exhaustive_expansion").get<bool>();
  c.K_override = get_opt<std::uint32_t>(j, "K_override");
  c.workers = j.at("workers").get<std::size_t>();
  c.record_timing = j.at("record_timing").get<bool>();
  c.csv_path = j.at("csv_path").get<std::string>();
  c.report_path = j.at("report_path").get<std::string>();
  return c;
}

json to_json(const TrialRecord& r) {
  return {
      {"trial", r.trial},
      {"seed", r.seed},
      {"n", r.n},
      {"d", r.d},
      {"alpha", opt(r.alpha)},
      {"p", r.p},
      {"sampling_attempts", r.sampling_attempts},
      {"r", r.r},
      {"census", r.census},
      {"mu", r.mu},
      {"survivor_pairs", r.survivor_pairs},
      {"giant_size", r.giant_size},
      {"component_count", r.component_count},
      {"isolated_tree_count", r.isolated_tree_count},
      {"max_isolated_tree_size", r.max_isolated_tree_size},
      {"max_bush_size", r.max_bush_size},
      {"isolated_cycle_count", r.isolated_cycle_count},
      {"two_core_size", r.two_core_size},
      {"two_core_edges", r.two_core_edges},
      {"core_census", r.core_census},
      {"kernel_size", r.kernel_size},
      {"longest_deg2_run", r.longest_deg2_run},
      {"connected", r.connected},
      {"others_isolated_vertices", r.others_isolated_vertices},
      {"others_are_trees", r.others_are_trees},
      {"beta_exact", opt(r.beta_exact)},
      {"beta_witness", r.beta_witness},
      {"gamma_exact", opt(r.gamma_exact)},
      {"beta_lower", opt(r.beta_lower)},
      {"beta_upper", opt(r.beta_upper)},
      {"beta_upper_source", opt(r.beta_upper_source)},
      {"lambda2", opt(r.lambda2)},
      {"diameter", opt(r.diameter)},
      {"diameter_bound", opt(r.diameter_bound)},
      {"diameter_pass", opt(r.diameter_pass)},
      {"runtime_ms", r.runtime_ms},
      {"error", r.error},
  };
}

TrialRecord record_from_json(const json& j) {
  TrialRecord r;
  r.trial = j.at("trial").get<std::size_t>();
  r.seed = j.at("seed").get<Seed>();
  r.n = j.at("n").get<std::size_t>();
  r.d = j.at("d").get<std::uint32_t>();
  r.alpha = get_opt<double>(j, "alpha");
  r.p = j.at("p").get<double>();
  r.sampling_attempts = j.at("sampling_attempts").get<std::uint64_t>();
  r.r = j.at("r").get<std::size_t>();
  r.census = j.at("census").get<std::vector<std::uint64_t>>();
  r.mu = j.at("mu").get<std::vector<double>>();
  r.survivor_pairs = j.at("survivor_pairs").get<std::size_t>();
  r.giant_size = j.at("giant_size").get<std::size_t>();
  r.component_count = j.at("component_count").get<std::size_t>();
  r.isolated_tree_count = j.at("isolated_tree_count").get<std::size_t>();
  r.max_isolated_tree_size = j.at("max_isolated_tree_size").get<std::size_t>();
  r.max_bush_size = j.at("max_bush_size").get<std::size_t>();
  r.isolated_cycle_count = j.at("isolated_cycle_count").get<std::size_t>();
  r.two_core_size = j.at("two_core_size").get<std::size_t>();
  r.two_core_edges = j.at("two_core_edges").get<std::size_t>();
  r.core_census = j.at("core_census").get<std::vector<std::uint64_t>>();
  r.kernel_size = j.at("kernel_size").get<std::size_t>();
  r.longest_deg2_run = j.at("longest_deg2_run").get<std::size_t>();
  r.connected = j.at("connected").get<bool>();
  r.others_isolated_vertices = j.at("others_isolated_vertices").get<bool>();
  r.others_are_trees = j.at("others_are_trees").get<bool>();
  r.beta_exact = get_opt<double>(j, "beta_exact");
  r.beta_witness = j.at("beta_witness").get<std::vector<std::uint32_t>>();
  r.gamma_exact = get_opt<double>(j, "gamma_exact");
  r.beta_lower = get_opt<double>(j, "beta_lower");
  r.beta_upper = get_opt<double>(j, "beta_upper");
  r.beta_upper_source = get_opt<std::string>(j, "beta_upper_source");
  r.lambda2 = get_opt<double>(j, "lambda2");
  r.diameter = get_opt<std::size_t>(j, "diameter");
  r.diameter_bound = get_opt<double>(j, "diameter_bound");
  r.diameter_pass = get_opt<bool>(j, "diameter_pass");
  r.runtime_ms = j.at("runtime_ms").get<double>();
  r.error = j.at("error").get<std::string>();
  return r;
}

json to_json(const AggregateReport& report) {
  json fields = json::array();
  for (const auto& f : report.fields) {
    fields.push_back({{"name", f.name}, {"count", f.count}, {"mean", f.mean},
                      {"variance", f.variance}});
  }
  json indicators = json::array();
  for (const auto& i : report.indicators) {
    indicators.push_back({{"name", i.name}, {"fraction", i.fraction}});
  }
  json records = json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return {
      {"config", to_json(report.config)},
      {"trials", report.trials},
      {"failed_trials", report.failed_trials},
      {"failures", report.failures},
      {"fields", fields},
      {"indicators", indicators},
      {"census_to_mu", report.census_to_mu},
      {"predicted", report.predicted ? to_json(*report.predicted) : json(nullptr)},
      {"records", records},
  };
}

AggregateReport report_from_json(const json& j) {
  AggregateReport report;
  report.config = config_from_json(j.at("config"));
  report.trials = j.at("trials").get<std::size_t>();
  report.failed_trials = j.at("failed_trials").get<std::size_t>();
  report.failures = j.at("failures").get<std::vector<std::string>>();
  for (const auto& f : j.at("fields")) {
    report.fields.push_back({f.at("name").get<std::string>(), f.at("count").get<std::size_t>(),
                             f.at("mean").get<double>(), f.at("variance").get<double>()});
  }
  for (const auto& i : j.at("indicators")) {
    report.indicators.push_back({i.at("name").get<std::string>(), i.at("fraction").get<double>()});
  }
  report.census_to_mu = j.at("census_to_mu").get<std::vector<double>>();
  if (!j.at("predicted").is_null()) report.predicted = predictions_from_json(j.at("predicted"));
  for (const auto& r : j.at("records")) report.records.push_back(record_from_json(r));
  return report;
}

json to_json(const Decomposition& dec) {
  const auto& parent = dec.core.to_parent;
  json bushes = json::array();
  for (const Bush& b : dec.bushes) {
    bushes.push_back({{"vertices", one_based(b.vertices)},
                      {"root", b.root ? json(*b.root + 1) : json(nullptr)}});
  }
  json trees = json::array();
  for (const Bush& b : dec.isolated_trees()) trees.push_back(one_based(b.vertices));
  json cycles = json::array();
  for (const auto& cycle : dec.kernel.isolated_cycles) {
    json c = json::array();
    for (Vertex v : cycle) c.push_back(parent[v] + 1);
    cycles.push_back(c);
  }
  return {
      {"two_core_size", dec.core.core.num_vertices()},
      {"two_core_edges", dec.core.core.num_edges()},
      {"kernel_size", dec.kernel.kernel.num_vertices()},
      {"kernel_edges", dec.kernel.kernel.num_edges()},
      {"core_census", dec.core_census},
      {"bushes", bushes},
      {"isolated_trees", trees},
      {"isolated_cycles", cycles},
      {"giant_size", dec.components.giant_size()},
      {"component_count", dec.components.components.size()},
      {"longest_deg2_run", dec.longest_run.length},
      {"longest_run_on_cycle", dec.longest_run.from_cycle},
  };
}

json to_json(const ExpansionCertificate& cert) {
  json out = {{"n", cert.n}, {"max_degree", cert.max_degree}};
  if (cert.exact_beta) {
    out["exact_beta"] = cert.exact_beta->ratio.value();
    out["exact_beta_ratio"] = {cert.exact_beta->ratio.num, cert.exact_beta->ratio.den};
    out["witness"] = one_based(cert.exact_beta->witness);
  } else {
    out["exact_beta"] = nullptr;
    out["witness"] = nullptr;
  }
  out["exact_gamma"] = cert.exact_gamma ? json(cert.exact_gamma->ratio.value()) : json(nullptr);
  auto bound = [](const std::optional<Bound>& b) {
    return b ? json{{"value", b->value}, {"source", b->source}} : json(nullptr);
  };
  out["lower_bound"] = bound(cert.lower_bound);
  out["upper_bound"] = bound(cert.upper_bound);
  out["lambda2"] = opt(cert.lambda2);
  if (cert.diameter) {
    out["diameter"] = opt(cert.diameter->diameter);
    out["diameter_bound"] = cert.diameter->bound;
    out["strict_diameter_bound"] = cert.diameter->strict_bound;
    out["bound_pass"] = cert.diameter->pass;
    out["strict_bound_pass"] = cert.diameter->strict_pass;
  } else {
    out["diameter"] = nullptr;
    out["bound_pass"] = nullptr;
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw Error("write failed for " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_report(const AggregateReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  const auto& c = report.config;
  std::ostringstream csv;
  write_csv(csv, report.records, c.d);
  write_file(dir / (c.csv_path.empty() ? "results.csv" : c.csv_path), csv.str());
  write_file(dir / (c.report_path.empty() ? "report.json" : c.report_path),
             to_json(report).dump(2) + "\n");
}

}  // namespace perclab
