#pragma once

#include <cstdint>
#include <span>

namespace perclab::stats {

struct ChiSquare {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 1;
  friend bool operator==(const ChiSquare&, const ChiSquare&) = default;
};

// Pearson chi-square of observed counts against the uniform distribution
// over counts.size() categories. Throws DomainError with fewer than two
// categories or no observations.
ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts);

// Pearson chi-square against expected counts (same total as observed).
ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected);

// Running mean and (sample) variance, Welford's update.
class Accumulator {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }

 private:
  std::size_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

// Standard deviation of the number of successes in `trials` Bernoulli(p).
double binomial_sd(double trials, double p);

}  // namespace perclab::stats
