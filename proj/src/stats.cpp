#include "perclab/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "perclab/errors.hpp"

namespace perclab::stats {

ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  if (observed.size() < 2 || observed.size() != expected.size()) {
    throw DomainError("chi-square needs at least two matching categories");
  }
  ChiSquare out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0)) throw DomainError("chi-square expected count must be positive");
    const double diff = static_cast<double>(observed[i]) - expected[i];
    out.statistic += diff * diff / expected[i];
  }
  out.dof = observed.size() - 1;
  const boost::math::chi_squared dist(static_cast<double>(out.dof));
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts) {
  const auto total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) throw DomainError("chi-square needs observations");
  const std::vector<double> expected(counts.size(),
                                     static_cast<double>(total) / static_cast<double>(counts.size()));
  return chi_square(counts, expected);
}

double binomial_sd(double trials, double p) { return std::sqrt(trials * p * (1 - p)); }

}  // namespace perclab::stats
