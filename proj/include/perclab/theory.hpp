#pragma once

// Closed-form predictions for vertex percolation at p = n^-alpha on random
// d-regular graphs, and the desk-scale surrogates used to read asymptotic
// statements at a fixed n.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace perclab::theory {

// n^(1-alpha) at or above this value is treated as "tending to infinity".
inline constexpr double kConcentrationThreshold = 30.0;
// An o(1) quantity counts as vanished at a given n when it is below this.
inline constexpr double kVanishingThreshold = 0.1;
// mu_2 inside [lo, hi] is reported as the bounded (log log n) case.
inline constexpr double kBoundedMuLow = 0.1;
inline constexpr double kBoundedMuHigh = 10.0;

struct ModelParams {
  double n;
  std::uint32_t d;
  double alpha;
  double eta;

  // Throws DomainError unless d >= 3, eta > 0 and alpha >= eta.
  void validate() const;
  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

enum class Regime { a, b, c };
std::string_view to_string(Regime r);

// binom(d, j) * n^(1 - (d-j) alpha)
double mu(std::uint32_t j, double n, std::uint32_t d, double alpha);
std::vector<double> mu_all(double n, std::uint32_t d, double alpha);

struct ExpectedDeletions {
  double value;       // n^(1-alpha)
  bool concentrated;  // value >= kConcentrationThreshold
  friend bool operator==(const ExpectedDeletions&, const ExpectedDeletions&) = default;
};
ExpectedDeletions expected_r(double n, double alpha);

// Least integer strictly greater than 2 / ((d-2) eta).
std::uint32_t bush_bound_K(std::uint32_t d, double eta);

// c if eta >= 1/(d-1); b if eta > 1/(2(d-1)); a otherwise.
Regime regime_classify(std::uint32_t d, double eta);

// n^((d-2)/(2d-2)): cap on the number of isolated vertices in regime b.
double isolated_vertex_cap(double n, std::uint32_t d);

// n^(1 - 2(d-1) alpha): decay of the expected number of isolated trees with
// two or more vertices.
double isolated_tree_decay(double n, std::uint32_t d, double alpha);

struct CoreStats {
  double t;        // 2-core vertex count
  double m;        // 2-core pair count
  double n2;       // degree-2 vertices in the 2-core
};

// Core statistics implied by the mu_j: t = n - n^(1-alpha),
// N'_2 = mu_2 and m = (sum_{j>=2} j mu_j) / 2.
CoreStats predicted_core_stats(double n, std::uint32_t d, double alpha);

// (t-k)^2/(2m) * ((N'_2 - k)/(2m))^(k-1) with the leading constant set to 1.
// An order-of-magnitude predictor for the number of degree-2 paths with at
// least k-1 internal vertices. Zero when N'_2 <= k. Requires k >= 2.
double expected_deg2_paths(const CoreStats& core, std::uint32_t k);

struct Predictions {
  ModelParams params;
  std::vector<double> mu;
  ExpectedDeletions expected_r;
  std::uint32_t K;
  Regime regime;
  double isolated_vertex_cap;
  double isolated_tree_decay;
  bool mu2_bounded;  // mu_2 in the log log n band
  friend bool operator==(const Predictions&, const Predictions&) = default;
};

Predictions predict(const ModelParams& params);

}  // namespace perclab::theory
