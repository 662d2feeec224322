#include "perclab/acceptance.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <thread>

#include "perclab/decomposition.hpp"
#include "perclab/expansion.hpp"
#include "perclab/experiment.hpp"
#include "perclab/pairing_model.hpp"
#include "perclab/percolation.hpp"
#include "perclab/stats.hpp"
#include "perclab/theory.hpp"

namespace perclab {

namespace {

// Thresholds.
constexpr double kUniformityMinP = 1e-3;
constexpr double kUniformitySeconds = 5.0;
constexpr double kPairSigmas = 4.0;
constexpr double kCensusRelTol = 0.10;
constexpr double kN2Low = 3.0;
constexpr double kN2High = 9.0;
constexpr double kN0ZeroFraction = 0.99;
constexpr double kCensusSeconds = 60.0;
constexpr double kGiantFraction = 0.99;
constexpr double kCoreFraction = 0.98;
constexpr double kMostTrials = 0.95;
constexpr double kManyTrials = 0.90;
constexpr double kTightnessTrials = 0.80;
constexpr std::size_t kTightnessRun = 4;
constexpr double kTightnessBound = 2.0 / 3.0;
constexpr double kCompositionSigmas = 3.0;
constexpr double kBoundSlack = 1e-9;
constexpr double kPerfSeconds = 10.0;
constexpr double kPerfBytes = 2.0 * 1024 * 1024 * 1024;

constexpr std::size_t kLargeN = 100'000;
constexpr std::size_t kLargeTrials = 50;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double fraction(const std::vector<TrialRecord>& recs, const std::function<bool(const TrialRecord&)>& pred) {
  if (recs.empty()) return 0;
  std::size_t hit = 0;
  for (const auto& r : recs) hit += pred(r) ? 1 : 0;
  return static_cast<double>(hit) / static_cast<double>(recs.size());
}

double peak_rss_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_maxrss) * 1024.0;
}

// Brute-force 2-core: the largest vertex set whose induced subgraph has
// minimum degree >= 2. Valid sets are closed under union, so it is unique.
std::vector<bool> brute_force_core(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      std::size_t inside = 0;
      for (const auto& inc : g.incidences(v)) inside += (mask >> inc.to & 1);
      ok = inside >= 2;
    }
    if (ok && std::popcount(mask) > std::popcount(best)) best = mask;
  }
  std::vector<bool> out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = best >> v & 1;
  return out;
}

Multigraph random_multigraph(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> degs(n);
  std::uint64_t total = 0;
  for (auto& d : degs) {
    d = static_cast<std::uint32_t>(uniform_below(rng, 5));
    total += d;
  }
  if (total % 2) {
    ++degs[uniform_below(rng, n)];
    ++total;
  }
  if (total == 0) return Multigraph(n, {});
  return project(sample_configuration(DegreeSequence(degs), rng));
}

Multigraph random_simple(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, v});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph random_connected_simple(Rng& rng, std::size_t n) {
  const double p = 0.2 + 0.5 * uniform01(rng);
  for (;;) {
    Multigraph g = random_simple(rng, n, p);
    if (is_connected(g)) return g;
  }
}

// A small simple regular graph with some edges subdivided: connected, minimum
// degree 2 and long degree-2 runs.
Multigraph random_subdivided(Rng& rng, std::size_t max_n) {
  for (;;) {
    const std::uint32_t d = uniform_below(rng, 2) ? 3 : 4;
    const std::size_t base = d == 3 ? 4 + 2 * uniform_below(rng, 2) : 5 + uniform_below(rng, 2);
    const auto s = sample_simple_regular(base, d, rng());
    std::vector<Edge> edges;
    std::size_t n = base;
    for (const Edge& e : s.graph.edges()) {
      std::size_t extra = uniform_below(rng, 5);
      if (n + extra > max_n) extra = max_n - n;
      Vertex prev = e.u;
      for (std::size_t i = 0; i < extra; ++i) {
        const auto x = static_cast<Vertex>(n++);
        edges.push_back({prev, x});
        prev = x;
      }
      edges.push_back({prev, e.v});
    }
    Multigraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

// Up to target vertices of the given degree, pairwise at distance >= 3.
std::vector<Vertex> far_apart_set(const Multigraph& g, Rng& rng, std::size_t target,
                                  std::size_t degree) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  std::vector<bool> blocked(n, false);
  std::vector<Vertex> chosen;
  for (Vertex v : order) {
    if (chosen.size() == target) break;
    if (blocked[v] || g.degree(v) != degree) continue;
    chosen.push_back(v);
    // block the radius-2 ball
    blocked[v] = true;
    for (const auto& a : g.incidences(v)) {
      blocked[a.to] = true;
      for (const auto& b : g.incidences(a.to)) blocked[b.to] = true;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& o) : opts_(o) {
    workers_ = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  }

  CriterionResult run(int id) {
    CriterionResult r;
    r.id = id;
    const auto t0 = Clock::now();
    try {
      switch (id) {
        case 1: sampler_uniformity(r); break;
        case 2: pair_probability_check(r); break;
        case 3: degree_census(r); break;
        case 4: giant_component(r); break;
        case 5: bush_bound(r); break;
        case 6: core_properties(r); break;
        case 7: regime_c(r); break;
        case 8: regime_b(r); break;
        case 9: tightness(r); break;
        case 10: oracle_equivalences(r); break;
        case 11: conditional_uniformity(r); break;
        case 12: reinstatement(r); break;
        case 13: diameter_bound(r); break;
        case 14: performance(r); break;
        default: r.name = "unknown"; r.detail = "no such criterion"; break;
      }
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
    }
    r.seconds = since(t0);
    return r;
  }

 private:
  ExperimentConfig large(std::uint32_t d, double alpha) const {
    ExperimentConfig c;
    c.n = kLargeN;
    c.d = d;
    c.alpha = alpha;
    c.trials = kLargeTrials;
    c.base_seed = opts_.seed;
    c.workers = workers_;
    c.record_timing = false;
    return c;
  }

  // The d=4, alpha=0.5 runs shared by criteria 3 to 6.
  const AggregateReport& main_runs() {
    if (!main_) {
      const auto t0 = Clock::now();
      main_ = run_experiment(large(4, 0.5));
      main_seconds_ = since(t0);
    }
    return *main_;
  }

  static std::string failures(const AggregateReport& rep) {
    return rep.failed_trials ? fmt("; %zu failed trials", rep.failed_trials) : std::string();
  }

  void sampler_uniformity(CriterionResult& r) {
    r.name = "sampler uniformity";
    const auto t0 = Clock::now();
    UniformityOptions o;
    o.match_samples = 15'000;
    o.cond_samples = 0;
    const auto rep = uniformity_suite(derive_seed(opts_.seed, 1), o);
    const double secs = since(t0);
    r.pass = rep.matching_categories == 15 && rep.matching_test.p_value > kUniformityMinP &&
             secs < kUniformitySeconds;
    r.detail = fmt("%zu matchings, chi2=%.2f dof=%zu p=%.4f, %.2fs", rep.matching_categories,
                   rep.matching_test.statistic, rep.matching_test.dof, rep.matching_test.p_value,
                   secs);
  }

  void pair_probability_check(CriterionResult& r) {
    r.name = "pair probability";
    const auto seq = DegreeSequence::regular(4, 3);  // 12 points, m = 6
    const PointId a = seq.point_id({0, 0});
    const PointId b = seq.point_id({1, 0});
    constexpr std::uint64_t samples = 100'000;
    Rng rng = make_rng(derive_seed(opts_.seed, 2));
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      hits += sample_configuration(seq, rng).partner(a) == b ? 1 : 0;
    }
    const double target = 1.0 / 11.0;
    const double freq = static_cast<double>(hits) / samples;
    const double sigma = std::sqrt(target * (1 - target) / samples);
    const double exact = pair_probability(6, 1).exact;
    r.pass = std::abs(freq - target) <= kPairSigmas * sigma && std::abs(exact - target) < 1e-15;
    r.detail = fmt("frequency %.5f vs 1/11=%.5f, %.2f sigma", freq, target,
                   std::abs(freq - target) / sigma);
  }

  void degree_census(CriterionResult& r) {
    r.name = "degree census";
    const auto& rep = main_runs();
    const double mu3 = theory::mu(3, kLargeN, 4, 0.5);
    const double n3 = rep.field("N_3")->mean;
    const double n2 = rep.field("N_2")->mean;
    const double n0zero = rep.indicator("N0_zero")->fraction;
    r.pass = rep.failed_trials == 0 && std::abs(n3 / mu3 - 1) <= kCensusRelTol && n2 >= kN2Low &&
             n2 <= kN2High && n0zero >= kN0ZeroFraction && main_seconds_ < kCensusSeconds;
    r.detail = fmt("mean N_3=%.1f (mu_3=%.1f, ratio %.3f), mean N_2=%.2f, N_0=0 in %.0f%%, %.1fs",
                   n3, mu3, n3 / mu3, n2, 100 * n0zero, main_seconds_) +
               failures(rep);
  }

  void giant_component(CriterionResult& r) {
    r.name = "giant component and small trees";
    const auto& rep = main_runs();
    const std::size_t K = theory::bush_bound_K(4, 0.5);
    const double f = fraction(rep.records, [&](const TrialRecord& t) {
      return t.error.empty() && t.giant_size >= kGiantFraction * (t.n - t.r) && t.others_are_trees &&
             t.max_isolated_tree_size <= K;
    });
    r.pass = K == 3 && f >= kMostTrials;
    r.detail = fmt("K=%zu, giant >= 0.99(n-r) with only trees of <= K elsewhere in %.0f%% of trials",
                   K, 100 * f);
  }

  void bush_bound(CriterionResult& r) {
    r.name = "bush bound";
    const auto& rep = main_runs();
    const std::size_t K = theory::bush_bound_K(4, 0.5);
    const double f = fraction(rep.records, [&](const TrialRecord& t) {
      return t.error.empty() && t.max_bush_size <= K;
    });
    const double worst = rep.field("max_bush_size")->mean;
    r.pass = f >= kMostTrials;
    r.detail = fmt("no bush above K=%zu buckets in %.0f%% of trials (mean max bush %.2f)", K,
                   100 * f, worst);
  }

  void core_properties(CriterionResult& r) {
    r.name = "2-core properties";
    const auto& rep = main_runs();
    const double big = fraction(rep.records, [&](const TrialRecord& t) {
      return t.error.empty() && t.two_core_size >= kCoreFraction * (t.n - t.r);
    });
    const double acyclic = rep.indicator("no_isolated_cycles")->fraction;
    const double runs = rep.indicator("runs_within_K")->fraction;
    r.pass = big == 1.0 && acyclic >= kMostTrials && runs >= kManyTrials;
    r.detail = fmt("K=3: t >= 0.98(n-r) in %.0f%%, no isolated cycles in %.0f%%, runs <= K in %.0f%%, "
                   "mean t/(n-r)=%.5f",
                   100 * big, 100 * acyclic, 100 * runs, rep.field("two_core_fraction")->mean);
  }

  void regime_c(CriterionResult& r) {
    r.name = "regime c connectivity";
    const auto rep = run_experiment(large(4, 0.4));
    const double f = rep.indicator("connected")->fraction;
    r.pass = rep.failed_trials == 0 && f >= kManyTrials &&
             theory::regime_classify(4, 0.4) == theory::Regime::c;
    r.detail = fmt("connected in %.0f%% of trials (mean components %.2f)", 100 * f,
                   rep.field("component_count")->mean) +
               failures(rep);
  }

  void regime_b(CriterionResult& r) {
    r.name = "regime b isolated vertices";
    const auto rep = run_experiment(large(4, 0.2));
    const double only_vertices = rep.indicator("others_isolated_vertices")->fraction;
    const double under_cap = rep.indicator("N0_under_cap")->fraction;
    const double cap = theory::isolated_vertex_cap(kLargeN, 4);
    r.pass = rep.failed_trials == 0 && only_vertices >= kManyTrials && under_cap >= kMostTrials &&
             theory::regime_classify(4, 0.2) == theory::Regime::b;
    r.detail = fmt("only isolated vertices outside the giant in %.0f%%, N_0 <= %.1f in %.0f%% "
                   "(mean N_0=%.2f)",
                   100 * only_vertices, cap, 100 * under_cap, rep.field("N_0")->mean) +
               failures(rep);
  }

  void tightness(CriterionResult& r) {
    r.name = "tightness of the path bound";
    const auto rep = run_experiment(large(3, 0.18));
    const double f = fraction(rep.records, [](const TrialRecord& t) {
      return t.error.empty() && t.longest_deg2_run >= kTightnessRun && t.beta_upper &&
             *t.beta_upper <= kTightnessBound + kBoundSlack;
    });
    r.pass = rep.failed_trials == 0 && f >= kTightnessTrials;
    r.detail = fmt("run >= %zu with reported bound <= 2/3 in %.0f%% (mean longest run %.2f)",
                   kTightnessRun, 100 * f, rep.field("longest_deg2_run")->mean) +
               failures(rep);
  }

  void oracle_equivalences(CriterionResult& r) {
    r.name = "oracle equivalences";
    Rng rng = make_rng(derive_seed(opts_.seed, 10));
    std::size_t core_agree = 0;
    constexpr std::size_t core_cases = 1000;
    for (std::size_t i = 0; i < core_cases; ++i) {
      const std::size_t n = 1 + uniform_below(rng, 12);
      const Multigraph g = i % 2 ? random_multigraph(rng, n)
                                 : random_simple(rng, n, 0.1 + 0.4 * uniform01(rng));
      const auto expect = brute_force_core(g);
      const auto fifo = two_core(g);
      const auto random = two_core(g, rng);
      std::size_t inside_edges = 0;
      for (const Edge& e : g.edges()) inside_edges += expect[e.u] && expect[e.v];
      if (fifo.in_core == expect && random.in_core == expect &&
          fifo.core.num_edges() == inside_edges) {
        ++core_agree;
      }
    }
    constexpr std::size_t bound_cases = 500;
    std::size_t bound_agree = 0;
    std::size_t path_applicable = 0;
    std::size_t not_converged = 0;
    for (std::size_t i = 0; i < bound_cases; ++i) {
      const std::size_t n = 4 + uniform_below(rng, 13);
      const Multigraph g = i % 2 ? random_subdivided(rng, 16) : random_connected_simple(rng, n);
      const auto exact = exact_vertex_expansion(g).ratio.value();
      SpectralOptions so;
      so.seed = rng();
      const auto spec = spectral_lower_bound(g, so);
      not_converged += spec.converged ? 0 : 1;
      bool ok = spec.lower_bound <= exact + kBoundSlack;
      if (g.min_degree() >= 2) {
        if (auto up = path_upper_bound(longest_deg2_run(g).length, g.num_vertices())) {
          ++path_applicable;
          ok = ok && exact <= *up + kBoundSlack;
        }
      }
      bound_agree += ok ? 1 : 0;
    }
    r.pass = core_agree == core_cases && bound_agree == bound_cases && not_converged == 0;
    r.detail = fmt("2-core %zu/%zu, spectral <= exact <= path %zu/%zu (path bound applied %zu "
                   "times, %zu unconverged)",
                   core_agree, core_cases, bound_agree, bound_cases, path_applicable,
                   not_converged);
  }

  void conditional_uniformity(CriterionResult& r) {
    r.name = "conditional uniformity";
    UniformityOptions o;
    o.match_samples = 1'000;
    o.cond_samples = 100'000;
    const auto rep = uniformity_suite(derive_seed(opts_.seed, 11), o);
    std::size_t tested = 0;
    bool saw_regular = false;
    for (const auto& c : rep.conditional) {
      if (!c.test) continue;
      ++tested;
      if (c.degrees == std::vector<std::uint32_t>{2, 2, 2, 2}) saw_regular = true;
    }
    r.pass = tested > 0 && saw_regular && rep.min_conditional_p > kUniformityMinP;
    r.detail = fmt("%zu degree sequences seen, %zu tested, min p=%.4f", rep.conditional.size(),
                   tested, rep.min_conditional_p);
  }

  void reinstatement(CriterionResult& r) {
    r.name = "reinstatement";
    constexpr std::size_t n = 10'000;
    constexpr std::uint32_t d = 4;
    constexpr double alpha = 0.9;
    constexpr std::size_t trials = 200;
    const double p1 = std::pow(double(n), -0.75);
    const double q = std::pow(double(n), 0.75 - alpha);
    const double p = std::pow(double(n), -alpha);
    std::vector<std::uint32_t> two_stage(n, 0), direct(n, 0);
    std::size_t composed_ok = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Seed s = derive_seed(opts_.seed, 1'200 + t);
      const auto graph = sample_simple_regular(n, d, derive_seed(s, 1));
      Rng rng = make_rng(derive_seed(s, 2));
      const auto first = apply_deletion(graph.config, choose_deletion_set(n, p1, rng));
      const auto w = sample_reinstated(first, q, derive_seed(s, 3));
      std::vector<Bucket> final_r;
      std::set_difference(first.deleted.begin(), first.deleted.end(), w.begin(), w.end(),
                          std::back_inserter(final_r));
      const auto composed = reinstate(graph.config, first, w);
      const auto expected = apply_deletion(graph.config, final_r);
      if (composed.survivors == expected.survivors && composed.deleted == final_r) ++composed_ok;
      for (Bucket b : final_r) ++two_stage[b];
      Rng rng2 = make_rng(derive_seed(s, 4));
      for (Bucket b : choose_deletion_set(n, p, rng2)) ++direct[b];
    }
    const double cells = double(n) * trials;
    const double mean = cells * p;
    const double sigma = stats::binomial_sd(cells, p);
    const double total2 = std::accumulate(two_stage.begin(), two_stage.end(), 0.0);
    const double totald = std::accumulate(direct.begin(), direct.end(), 0.0);
    // Two-stage against the target rate, and two-stage against direct.
    const bool freq_ok = std::abs(total2 - mean) <= kCompositionSigmas * sigma &&
                         std::abs(total2 - totald) <= kCompositionSigmas * std::sqrt(2.0) * sigma;
    // No single bucket should stand out: with p this small a bucket deleted
    // in more than 4 of 200 trials has probability well below 1e-6.
    const auto max2 = *std::max_element(two_stage.begin(), two_stage.end());

    Rng rng = make_rng(derive_seed(opts_.seed, 12));
    constexpr std::size_t oracle_cases = 200;
    std::size_t held = 0, nontrivial = 0, reinstated = 0;
    for (std::size_t i = 0; i < oracle_cases; ++i) {
      // A reinstated vertex keeps all d of its neighbours, as in the deletion
      // process it models.
      Multigraph ghat;
      std::uint32_t dd = 3;
      if (i % 2 == 0) {
        dd = uniform_below(rng, 2) ? 3 : 4;
        const std::size_t nn = dd == 3 ? 8 + 2 * uniform_below(rng, 5) : 8 + uniform_below(rng, 9);
        ghat = sample_simple_regular(nn, dd, rng()).graph;
      } else {
        const std::size_t nn = 12 + 2 * uniform_below(rng, 5);
        const auto g = sample_simple_regular(nn, 3, rng());
        const auto out = apply_deletion(g.config, choose_deletion_set(nn, 0.15, rng));
        ghat = project(out.survivors);
        if (ghat.num_vertices() < 6 || ghat.num_vertices() > 16) {
          --i;
          continue;
        }
      }
      const auto w = far_apart_set(ghat, rng, 1 + uniform_below(rng, 3), dd);
      std::vector<bool> keep(ghat.num_vertices(), true);
      for (Vertex v : w) keep[v] = false;
      const auto gprime = induced_subgraph(ghat, keep).graph;
      const auto check = reinstatement_expansion_check(gprime, w, ghat);
      held += check.precondition_ok && check.expansion_ok ? 1 : 0;
      reinstated += w.size();
      nontrivial += check.nontrivial_sets;
    }
    r.pass = composed_ok == trials && freq_ok && max2 <= 4 && held == oracle_cases;
    r.detail = fmt("composition %zu/%zu; deletions two-stage %.0f, direct %.0f, expected %.1f "
                   "+- %.1f; max per bucket %u; expansion kept %zu/%zu (%zu vertices reinstated, %zu "
                   "nontrivial sets)",
                   composed_ok, trials, total2, totald, mean, sigma, max2, held, oracle_cases,
                   reinstated, nontrivial);
  }

  void diameter_bound(CriterionResult& r) {
    r.name = "diameter bound";
    std::size_t eligible = 0, held = 0;
    double worst = 0;
    const std::pair<std::size_t, std::uint32_t> shapes[] = {{20, 3}, {16, 4}, {18, 3}, {20, 4}};
    for (const auto& [n, d] : shapes) {
      ExperimentConfig c;
      c.n = n;
      c.d = d;
      c.alpha = 0.5;
      c.trials = 100;
      c.base_seed = derive_seed(opts_.seed, 13 * n + d);
      c.exhaustive_expansion = true;
      c.workers = workers_;
      c.record_timing = false;
      const auto rep = run_experiment(c);
      for (const auto& t : rep.records) {
        if (!t.error.empty() || !t.beta_exact || *t.beta_exact <= 0) continue;
        ++eligible;
        held += t.diameter_pass.value_or(false) ? 1 : 0;
        if (t.diameter && t.diameter_bound) {
          worst = std::max(worst, double(*t.diameter) / *t.diameter_bound);
        }
      }
    }
    r.pass = eligible > 0 && held == eligible;
    r.detail = fmt("%zu/%zu trials with beta > 0 within 2 log_{1+beta}(n/2) + 2 (max ratio %.3f)",
                   held, eligible, worst);
  }

  void performance(CriterionResult& r) {
    r.name = "performance";
    ExperimentConfig c;
    c.n = 1'000'000;
    c.d = 4;
    c.alpha = 0.5;
    c.base_seed = opts_.seed;
    c.record_timing = false;
    const auto t0 = Clock::now();
    const auto rec = run_trial(c, 0);
    const double secs = since(t0);
    const double rss = peak_rss_bytes();
    r.pass = secs < kPerfSeconds && rss < kPerfBytes;
    r.detail = fmt("n=10^6 trial in %.2fs (%llu sampling attempts), peak RSS %.0f MiB, giant %zu",
                   secs, static_cast<unsigned long long>(rec.sampling_attempts),
                   rss / (1024 * 1024), rec.giant_size);
  }

  AcceptanceOptions opts_;
  std::size_t workers_ = 1;
  std::optional<AggregateReport> main_;
  double main_seconds_ = 0;
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  return fmt("[%s] %2d %s: %s (%.1fs)", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
             r.detail.c_str(), r.seconds);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* log) {
  Suite suite(options);
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(suite.run(id));
    if (log) *log << format_result(out.back()) << std::endl;
  }
  return out;
}

}  // namespace perclab
