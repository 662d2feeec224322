#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "perclab/errors.hpp"
#include "perclab/experiment.hpp"
#include "perclab/report.hpp"

using namespace perclab;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n = 2'000;
  c.d = 4;
  c.alpha = 0.4;
  c.trials = 6;
  c.base_seed = 100;
  c.record_timing = false;
  return c;
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("config parsing") {
  std::istringstream in(
      "# comment\n"
      "n = 500\n"
      "d=3\n"
      "alpha = 0.5   # inline\n"
      "trials = 4\n"
      "base_seed = 9\n"
      "mode = multigraph\n"
      "exhaustive_expansion = true\n"
      "K_override = 5\n"
      "workers = 2\n"
      "csv_path = a.csv\n");
  const auto c = parse_config(in);
  CHECK(c.n == 500);
  CHECK(c.d == 3);
  CHECK(*c.alpha == 0.5);
  CHECK(c.mode == GraphMode::multigraph);
  CHECK(c.exhaustive_expansion);
  CHECK(c.size_bound() == 5);
  CHECK(c.csv_path == "a.csv");

  std::istringstream unknown("n = 10\nd = 4\nalpha = 0.5\ncolour = red\n");
  CHECK_THROWS_AS(parse_config(unknown), FormatError);
  std::istringstream mode("n = 10\nd = 4\nalpha = 0.5\nmode = fast\n");
  CHECK_THROWS_AS(parse_config(mode), FormatError);
  std::istringstream both("n = 10\nd = 4\nalpha = 0.5\np = 0.1\n");
  CHECK_THROWS_AS(parse_config(both), DomainError);
  std::istringstream zero("n = 10\nd = 4\nalpha = 0.5\ntrials = 0\n");
  CHECK_THROWS_AS(parse_config(zero), DomainError);
}

TEST_CASE("trial records are pure and internally consistent") {
  const auto c = small_config();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto rec = run_trial(c, i);
    CHECK(rec == run_trial(c, i));
    CHECK(rec.seed == c.base_seed + i);
    std::uint64_t buckets = 0, points = 0;
    for (std::size_t j = 0; j < rec.census.size(); ++j) {
      buckets += rec.census[j];
      points += j * rec.census[j];
    }
    CHECK(buckets == c.n - rec.r);
    CHECK(points == 2 * rec.survivor_pairs);
    CHECK(rec.two_core_size <= c.n - rec.r);
    CHECK(rec.two_core_edges <= rec.survivor_pairs);
    CHECK(rec.giant_size <= c.n - rec.r);
    CHECK(rec.mu.size() == c.d + 1);
  }
}

TEST_CASE("small trials carry exact expansion with a witness") {
  ExperimentConfig c;
  c.n = 12;
  c.d = 3;
  c.alpha = 0.5;
  c.trials = 5;
  c.exhaustive_expansion = true;
  c.record_timing = false;
  const auto rep = run_experiment(c);
  for (const auto& rec : rep.records) {
    REQUIRE(rec.error.empty());
    if (c.n - rec.r < 2) continue;
    REQUIRE(rec.beta_exact);
    CHECK_FALSE(rec.beta_witness.empty());
    CHECK(rec.gamma_exact);
    if (*rec.beta_exact > 0) CHECK(rec.diameter_pass.value_or(false));
  }
}

TEST_CASE("no deletions leaves a connected regular graph") {
  ExperimentConfig c;
  c.n = 500;
  c.d = 3;
  c.alpha = 50;
  c.trials = 5;
  c.record_timing = false;
  const auto rep = run_experiment(c);
  for (const auto& rec : rep.records) {
    CHECK(rec.r == 0);
    CHECK(rec.connected);
    CHECK(rec.two_core_size == 500);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  auto c = small_config();
  c.workers = 1;
  const auto one = run_experiment(c);
  c.workers = 3;
  const auto three = run_experiment(c);
  auto a = to_json(one);
  auto b = to_json(three);
  a["config"].erase("workers");
  b["config"].erase("workers");
  CHECK(a.dump() == b.dump());
  std::ostringstream csv1, csv3;
  write_csv(csv1, one.records, c.d);
  write_csv(csv3, three.records, c.d);
  CHECK(csv1.str() == csv3.str());
}

TEST_CASE("a single trial aggregates to its own values") {
  auto c = small_config();
  c.trials = 1;
  const auto rep = run_experiment(c);
  REQUIRE(rep.records.size() == 1);
  const auto& rec = rep.records[0];
  CHECK(rep.field("giant_size")->mean == rec.giant_size);
  CHECK(rep.field("r")->mean == rec.r);
  CHECK(rep.field("r")->variance == 0);
  CHECK(rep.indicator("connected")->fraction == (rec.connected ? 1.0 : 0.0));
  REQUIRE(rep.predicted);
  CHECK(rep.predicted->K == c.size_bound());
}

TEST_CASE("csv layout") {
  const auto cols = csv_columns(4);
  std::string header;
  for (const auto& col : cols) header += (header.empty() ? "" : ",") + col;
  CHECK(header ==
        "n,d,alpha,seed,r,N_0,N_1,N_2,N_3,N_4,mu_0,mu_1,mu_2,mu_3,mu_4,giant_size,two_core_size,"
        "longest_deg2_run,max_tree_size,isolated_cycles,connected,beta_exact,beta_lower,"
        "beta_upper,lambda2,diameter,runtime_ms");
  std::ostringstream empty;
  write_csv(empty, {}, 4);
  CHECK(empty.str() == header + "\n");

  auto c = small_config();
  c.trials = 1;
  const auto rep = run_experiment(c);
  std::ostringstream one;
  write_csv(one, rep.records, 4);
  CHECK(count_lines(one.str()) == 2);
  const auto row = one.str().substr(header.size() + 1);
  CHECK(std::count(row.begin(), row.end(), ',') == static_cast<long>(cols.size() - 1));
}

TEST_CASE("structured report round trip") {
  auto c = small_config();
  c.trials = 3;
  c.exhaustive_expansion = true;
  const auto rep = run_experiment(c);
  const auto text = to_json(rep).dump();
  const auto back = report_from_json(nlohmann::json::parse(text));
  CHECK(back == rep);
  CHECK(to_json(back).dump() == text);

  const auto dir = std::filesystem::temp_directory_path() / "perclab_report_test";
  std::filesystem::remove_all(dir);
  emit_report(rep, dir);
  CHECK(std::filesystem::exists(dir / "results.csv"));
  CHECK(report_from_json(nlohmann::json::parse(read_file(dir / "report.json"))) == rep);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_file(dir / "missing.json"), Error);
}
