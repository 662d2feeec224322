#include "perclab/theory.hpp"

#include <cmath>
#include <string>

#include "perclab/errors.hpp"

namespace perclab::theory {

namespace {

double binomial(std::uint32_t n, std::uint32_t k) {
  double out = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Relative slack for comparisons against parameter boundaries that are
// themselves computed in floating point (1/3, 2/0.2, ...).
constexpr double kBoundaryTolerance = 1e-12;

}  // namespace

void ModelParams::validate() const {
  if (d < 3) throw DomainError("degree must be at least 3");
  if (!(eta > 0)) throw DomainError("eta must be positive");
  if (alpha < eta * (1 - kBoundaryTolerance)) throw DomainError("alpha must be at least eta");
  if (!(n >= 1)) throw DomainError("n must be at least 1");
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::a: return "a";
    case Regime::b: return "b";
    case Regime::c: return "c";
  }
  return "?";
}

double mu(std::uint32_t j, double n, std::uint32_t d, double alpha) {
  if (j > d) throw DomainError("mu index " + std::to_string(j) + " exceeds degree");
  return binomial(d, j) * std::pow(n, 1.0 - (d - j) * alpha);
}

std::vector<double> mu_all(double n, std::uint32_t d, double alpha) {
  std::vector<double> out(d + 1);
  for (std::uint32_t j = 0; j <= d; ++j) out[j] = mu(j, n, d, alpha);
  return out;
}

ExpectedDeletions expected_r(double n, double alpha) {
  const double value = std::pow(n, 1.0 - alpha);
  return {value, value >= kConcentrationThreshold};
}

std::uint32_t bush_bound_K(std::uint32_t d, double eta) {
  if (d < 3) throw DomainError("bush bound needs d >= 3");
  if (!(eta > 0)) throw DomainError("bush bound needs eta > 0");
  const double x = 2.0 / ((d - 2) * eta);
  double k = std::floor(x);
  // x within rounding of an integer counts as that integer.
  if (std::abs(x - std::round(x)) <= kBoundaryTolerance * x) k = std::round(x);
  return static_cast<std::uint32_t>(k) + 1;
}

Regime regime_classify(std::uint32_t d, double eta) {
  const double c_edge = 1.0 / (d - 1);
  const double b_edge = 1.0 / (2.0 * (d - 1));
  if (eta >= c_edge * (1 - kBoundaryTolerance)) return Regime::c;
  if (eta > b_edge * (1 + kBoundaryTolerance)) return Regime::b;
  return Regime::a;
}

double isolated_vertex_cap(double n, std::uint32_t d) {
  return std::pow(n, (d - 2.0) / (2.0 * d - 2.0));
}

double isolated_tree_decay(double n, std::uint32_t d, double alpha) {
  return std::pow(n, 1.0 - 2.0 * (d - 1) * alpha);
}

CoreStats predicted_core_stats(double n, std::uint32_t d, double alpha) {
  const auto m = mu_all(n, d, alpha);
  double degree_sum = 0;
  for (std::uint32_t j = 2; j <= d; ++j) degree_sum += j * m[j];
  return {n - expected_r(n, alpha).value, degree_sum / 2.0, m[2]};
}

double expected_deg2_paths(const CoreStats& core, std::uint32_t k) {
  if (k < 2) throw DomainError("path length must be at least 2");
  if (core.n2 <= k) return 0.0;
  const double two_m = 2.0 * core.m;
  return (core.t - k) * (core.t - k) / two_m * std::pow((core.n2 - k) / two_m, k - 1.0);
}

Predictions predict(const ModelParams& params) {
  params.validate();
  Predictions p{params,
                mu_all(params.n, params.d, params.alpha),
                expected_r(params.n, params.alpha),
                bush_bound_K(params.d, params.eta),
                regime_classify(params.d, params.eta),
                isolated_vertex_cap(params.n, params.d),
                isolated_tree_decay(params.n, params.d, params.alpha),
                false};
  p.mu2_bounded = p.mu[2] >= kBoundedMuLow && p.mu[2] <= kBoundedMuHigh;
  return p;
}

}  // namespace perclab::theory
