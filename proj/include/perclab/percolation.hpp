#pragma once

// Bucket deletion on a configuration: choose a random bucket set R, strip
// those buckets with every pair touching them, and relabel what survives
// preserving relative order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "perclab/pairing_model.hpp"
#include "perclab/rng.hpp"

namespace perclab {

struct DeletionParams {
  std::size_t n = 0;
  double p = 0;
  std::optional<double> alpha;  // set when p was derived as n^-alpha
  Seed seed = 0;

  static DeletionParams from_alpha(std::size_t n, double alpha, Seed seed);
  static DeletionParams from_probability(std::size_t n, double p, Seed seed);
};

// Each bucket independently with probability p; sorted ascending.
// Throws DomainError unless 0 < p < 1.
std::vector<Bucket> choose_deletion_set(const DeletionParams& params);
std::vector<Bucket> choose_deletion_set(std::size_t n, double p, Rng& rng);

struct PercolationOutcome {
  std::size_t original_buckets = 0;
  std::uint32_t original_degree = 0;  // max bucket size of the original; census length - 1
  std::vector<Bucket> deleted;        // R, original labels, ascending
  Configuration survivors;            // the surviving pairing over n - r buckets
  std::vector<Bucket> bucket_relabel; // survivor bucket -> original bucket (increasing)
  // Survivor global point id -> original global point id. Increasing within
  // each bucket. Empty when the outcome was read back from text.
  std::vector<PointId> point_relabel;
  std::vector<std::uint64_t> census;  // N_0 .. N_d

  std::size_t r() const { return deleted.size(); }
};

// Throws DomainError if R names a bucket the configuration does not have.
// R need not be sorted; duplicates are ignored.
PercolationOutcome apply_deletion(const Configuration& config, std::span<const Bucket> deleted);

// Survivor counts per degree, and the mu_j predictions when alpha is known.
struct CensusReport {
  std::vector<std::uint64_t> counts;
  std::optional<std::vector<double>> mu;
};
CensusReport degree_census(const PercolationOutcome& outcome, std::optional<double> alpha);

// Outcome of deleting R \ W from the original configuration. Throws
// DomainError unless W is a subset of the outcome's R.
PercolationOutcome reinstate(const Configuration& original, const PercolationOutcome& outcome,
                             std::span<const Bucket> reinstated);

// Keeps each bucket of R deleted with probability keep_deleted and reinstates
// it otherwise. Returns the reinstated set W (ascending).
std::vector<Bucket> sample_reinstated(const PercolationOutcome& outcome, double keep_deleted,
                                      Seed seed);

// Configuration text followed by "deleted: ..." (1-based, ascending) and
// "census: N_0 ... N_d".
void write_outcome(std::ostream& out, const PercolationOutcome& outcome);
PercolationOutcome read_outcome(std::istream& in);

}  // namespace perclab
