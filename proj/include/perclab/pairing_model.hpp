#pragma once

// Configuration (pairing) model: buckets of points, uniform perfect matchings
// of the points, and projection of a matching to a multigraph.
//
// Internally buckets, points and vertices are 0-based and every point has a
// global id: the points of bucket b are first_point(b) .. first_point(b)+d_b-1.
// Text formats are 1-based.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "perclab/multigraph.hpp"
#include "perclab/rng.hpp"

namespace perclab {

using Bucket = std::uint32_t;
using PointId = std::uint32_t;

inline constexpr PointId kNoPoint = std::numeric_limits<PointId>::max();

// Bucket and 0-based position inside the bucket.
struct Point {
  Bucket bucket;
  std::uint32_t index;
  friend bool operator==(const Point&, const Point&) = default;
};

class DegreeSequence {
 public:
  DegreeSequence() = default;
  // Throws InvalidDegreeSequence on an odd point total or a degree above
  // max_degree. A max_degree of 0 means "no cap".
  explicit DegreeSequence(std::vector<std::uint32_t> degrees, std::uint32_t max_degree = 0);

  static DegreeSequence regular(std::size_t n, std::uint32_t d);

  std::size_t num_buckets() const { return degrees_.size(); }
  std::uint32_t degree(Bucket b) const { return degrees_[b]; }
  std::span<const std::uint32_t> degrees() const { return degrees_; }
  std::uint32_t max_degree() const { return max_degree_; }

  std::size_t total_points() const { return owner_.size(); }
  std::size_t pair_count() const { return owner_.size() / 2; }

  PointId first_point(Bucket b) const { return offsets_[b]; }
  PointId point_id(Point p) const { return offsets_[p.bucket] + p.index; }
  Bucket bucket_of(PointId id) const { return owner_[id]; }
  Point point(PointId id) const { return {owner_[id], id - offsets_[owner_[id]]}; }

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.degrees_ == b.degrees_;
  }

 private:
  std::vector<std::uint32_t> degrees_;
  std::vector<PointId> offsets_{0};
  std::vector<Bucket> owner_;
  std::uint32_t max_degree_ = 0;
};

// A degree sequence together with a perfect matching of its points.
class Configuration {
 public:
  Configuration() = default;
  // partner[i] is the point matched with point i. Throws DomainError unless
  // it is a fixed-point-free involution on all points.
  Configuration(DegreeSequence seq, std::vector<PointId> partner);
  // Builds from explicit pairs; every point must appear exactly once.
  static Configuration from_pairs(DegreeSequence seq, std::span<const std::pair<Point, Point>> pairs);

  const DegreeSequence& degree_sequence() const { return seq_; }
  std::size_t num_buckets() const { return seq_.num_buckets(); }
  std::size_t pair_count() const { return seq_.pair_count(); }

  PointId partner(PointId id) const { return partner_[id]; }
  std::span<const PointId> partners() const { return partner_; }

  // Pairs (a, b) with a < b, ordered by a.
  std::vector<std::pair<PointId, PointId>> pairs() const;
  bool has_pair(Point a, Point b) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.seq_ == b.seq_ && a.partner_ == b.partner_;
  }

 private:
  DegreeSequence seq_;
  std::vector<PointId> partner_;
};

// Uniform perfect matching over all (2m-1)!! matchings of seq's points.
// Throws InvalidDegreeSequence if the point total is zero.
Configuration sample_configuration(const DegreeSequence& seq, Seed seed);
Configuration sample_configuration(const DegreeSequence& seq, Rng& rng);

// One vertex per bucket, one edge per pair; edge i comes from the i-th pair of
// Configuration::pairs().
Multigraph project(const Configuration& config);

bool is_simple(const Multigraph& g);

struct SimpleSample {
  Configuration config;
  Multigraph graph;
  std::uint64_t attempts = 0;  // configurations drawn, including the accepted one
};

inline constexpr std::uint64_t kDefaultRetryCap = 10'000;

// Rejection sampling of a configuration whose projection is simple; the
// result is a uniform simple d-regular graph. A draw is abandoned as soon as
// it forms a loop or a repeated edge. Throws SamplingFailure after retry_cap
// rejected draws.
SimpleSample sample_simple_regular(std::size_t n, std::uint32_t d, Seed seed,
                                   std::uint64_t retry_cap = kDefaultRetryCap);
SimpleSample sample_simple(const DegreeSequence& seq, Seed seed,
                           std::uint64_t retry_cap = kDefaultRetryCap);

// Probability that a uniform matching of 2m points contains k given disjoint
// pairs.
struct PairProbability {
  double exact;       // prod_{i<k} 1/(2m-1-2i)
  double asymptotic;  // (2m)^-k
};
PairProbability pair_probability(std::uint64_t m, std::uint64_t k);

// Every perfect matching of seq's points, in a fixed order. Intended for
// small instances; throws DomainError above 14 points.
std::vector<Configuration> enumerate_matchings(const DegreeSequence& seq);

// Number of perfect matchings, (2m-1)!!.
double matching_count(std::size_t total_points);

// Text formats (1-based labels).
//   configuration: "n d_1 ... d_n" then one "b1 p1 b2 p2" line per pair
//   edge list:     one "u v" line per edge, loops as "u u"
void write_configuration(std::ostream& out, const Configuration& config);
// Lines starting with a "key:" token after the pairs are collected into
// trailing when it is given and rejected otherwise.
Configuration read_configuration(std::istream& in, std::vector<std::string>* trailing = nullptr);
void write_edge_list(std::ostream& out, const Multigraph& g);

}  // namespace perclab
