#include "perclab/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "perclab/errors.hpp"
#include "perclab/theory.hpp"

namespace perclab {

DeletionParams DeletionParams::from_alpha(std::size_t n, double alpha, Seed seed) {
  if (!(alpha > 0)) throw DomainError("alpha must be positive");
  return {n, std::pow(static_cast<double>(n), -alpha), alpha, seed};
}

DeletionParams DeletionParams::from_probability(std::size_t n, double p, Seed seed) {
  return {n, p, std::nullopt, seed};
}

std::vector<Bucket> choose_deletion_set(std::size_t n, double p, Rng& rng) {
  if (!(p > 0 && p < 1)) {
    throw DomainError("deletion probability " + std::to_string(p) + " outside (0,1)");
  }
  std::vector<Bucket> out;
  for (Bucket b = 0; b < n; ++b) {
    if (bernoulli(rng, p)) out.push_back(b);
  }
  return out;
}

std::vector<Bucket> choose_deletion_set(const DeletionParams& params) {
  Rng rng = make_rng(params.seed);
  return choose_deletion_set(params.n, params.p, rng);
}

PercolationOutcome apply_deletion(const Configuration& config, std::span<const Bucket> deleted) {
  const DegreeSequence& seq = config.degree_sequence();
  const std::size_t n = seq.num_buckets();
  std::vector<bool> gone(n, false);
  PercolationOutcome out;
  out.original_buckets = n;
  out.original_degree = seq.max_degree();
  for (Bucket b : deleted) {
    if (b >= n) throw DomainError("deleted bucket " + std::to_string(b + 1) + " does not exist");
    gone[b] = true;
  }
  for (Bucket b = 0; b < n; ++b) {
    if (gone[b]) out.deleted.push_back(b);
    else out.bucket_relabel.push_back(b);
  }

  // A point survives when its bucket and its partner's bucket both survive.
  std::vector<std::uint32_t> degrees;
  degrees.reserve(out.bucket_relabel.size());
  std::vector<PointId> new_id(seq.total_points(), kNoPoint);
  for (Bucket b : out.bucket_relabel) {
    std::uint32_t kept = 0;
    const PointId first = seq.first_point(b);
    for (PointId id = first; id < first + seq.degree(b); ++id) {
      if (!gone[seq.bucket_of(config.partner(id))]) {
        new_id[id] = static_cast<PointId>(out.point_relabel.size());
        out.point_relabel.push_back(id);
        ++kept;
      }
    }
    degrees.push_back(kept);
  }
  std::vector<PointId> partner(out.point_relabel.size());
  for (PointId i = 0; i < partner.size(); ++i) {
    partner[i] = new_id[config.partner(out.point_relabel[i])];
  }
  out.census.assign(out.original_degree + 1, 0);
  for (std::uint32_t d : degrees) ++out.census[d];
  out.survivors = Configuration(DegreeSequence(std::move(degrees)), std::move(partner));
  return out;
}

CensusReport degree_census(const PercolationOutcome& outcome, std::optional<double> alpha) {
  CensusReport report{outcome.census, std::nullopt};
  if (alpha) {
    report.mu = theory::mu_all(static_cast<double>(outcome.original_buckets),
                               outcome.original_degree, *alpha);
  }
  return report;
}

PercolationOutcome reinstate(const Configuration& original, const PercolationOutcome& outcome,
                             std::span<const Bucket> reinstated) {
  std::vector<Bucket> w(reinstated.begin(), reinstated.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (!std::includes(outcome.deleted.begin(), outcome.deleted.end(), w.begin(), w.end())) {
    throw DomainError("reinstated set is not a subset of the deleted set");
  }
  std::vector<Bucket> still_deleted;
  std::set_difference(outcome.deleted.begin(), outcome.deleted.end(), w.begin(), w.end(),
                      std::back_inserter(still_deleted));
  return apply_deletion(original, still_deleted);
}

std::vector<Bucket> sample_reinstated(const PercolationOutcome& outcome, double keep_deleted,
                                      Seed seed) {
  if (!(keep_deleted >= 0 && keep_deleted <= 1)) {
    throw DomainError("keep-deleted probability outside [0,1]");
  }
  Rng rng = make_rng(seed);
  std::vector<Bucket> out;
  for (Bucket b : outcome.deleted) {
    if (!bernoulli(rng, keep_deleted)) out.push_back(b);
  }
  return out;
}

void write_outcome(std::ostream& out, const PercolationOutcome& outcome) {
  write_configuration(out, outcome.survivors);
  out << "deleted:";
  for (Bucket b : outcome.deleted) out << ' ' << b + 1;
  out << "\ncensus:";
  for (auto c : outcome.census) out << ' ' << c;
  out << '\n';
}

PercolationOutcome read_outcome(std::istream& in) {
  std::vector<std::string> sections;
  PercolationOutcome out;
  out.survivors = read_configuration(in, &sections);
  bool have_deleted = false;
  bool have_census = false;
  for (const std::string& line : sections) {
    std::istringstream row(line);
    std::string key;
    row >> key;
    if (key == "deleted:") {
      have_deleted = true;
      std::uint64_t b;
      while (row >> b) {
        if (b == 0) throw FormatError("bucket labels are 1-based");
        out.deleted.push_back(static_cast<Bucket>(b - 1));
      }
    } else if (key == "census:") {
      have_census = true;
      std::uint64_t c;
      while (row >> c) out.census.push_back(c);
    } else {
      throw FormatError("unknown section '" + key + "'");
    }
    if (!row.eof()) throw FormatError("bad value in section '" + key + "'");
  }
  if (!have_deleted || !have_census || out.census.empty()) {
    throw FormatError("outcome needs deleted: and census: lines");
  }
  std::sort(out.deleted.begin(), out.deleted.end());
  out.original_degree = static_cast<std::uint32_t>(out.census.size() - 1);
  out.original_buckets = out.survivors.num_buckets() + out.deleted.size();
  std::vector<bool> gone(out.original_buckets, false);
  for (Bucket b : out.deleted) {
    if (b >= out.original_buckets || gone[b]) throw FormatError("bad deleted list");
    gone[b] = true;
  }
  for (Bucket b = 0; b < out.original_buckets; ++b) {
    if (!gone[b]) out.bucket_relabel.push_back(b);
  }
  std::vector<std::uint64_t> counts(out.census.size(), 0);
  for (std::uint32_t d : out.survivors.degree_sequence().degrees()) {
    if (d >= counts.size()) throw FormatError("bucket degree exceeds census range");
    ++counts[d];
  }
  if (counts != out.census) throw FormatError("census does not match bucket degrees");
  return out;
}

}  // namespace perclab
