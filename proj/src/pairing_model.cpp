#include "perclab/pairing_model.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "perclab/errors.hpp"

namespace perclab {

DegreeSequence::DegreeSequence(std::vector<std::uint32_t> degrees, std::uint32_t max_degree)
    : degrees_(std::move(degrees)) {
  std::uint64_t total = 0;
  for (std::uint32_t d : degrees_) {
    if (max_degree != 0 && d > max_degree) {
      throw InvalidDegreeSequence("degree " + std::to_string(d) + " exceeds maximum " +
                                  std::to_string(max_degree));
    }
    max_degree_ = std::max(max_degree_, d);
    total += d;
  }
  if (total % 2 != 0) {
    throw InvalidDegreeSequence("point total " + std::to_string(total) + " is odd");
  }
  if (total >= std::numeric_limits<PointId>::max()) {
    throw InvalidDegreeSequence("point total too large");
  }
  offsets_.resize(degrees_.size() + 1);
  owner_.resize(total);
  PointId next = 0;
  for (Bucket b = 0; b < degrees_.size(); ++b) {
    offsets_[b] = next;
    std::fill_n(owner_.begin() + next, degrees_[b], b);
    next += degrees_[b];
  }
  offsets_[degrees_.size()] = next;
}

DegreeSequence DegreeSequence::regular(std::size_t n, std::uint32_t d) {
  return DegreeSequence(std::vector<std::uint32_t>(n, d));
}

Configuration::Configuration(DegreeSequence seq, std::vector<PointId> partner)
    : seq_(std::move(seq)), partner_(std::move(partner)) {
  if (partner_.size() != seq_.total_points()) {
    throw DomainError("matching size does not match point count");
  }
  for (PointId i = 0; i < partner_.size(); ++i) {
    const PointId j = partner_[i];
    if (j >= partner_.size() || j == i || partner_[j] != i) {
      throw DomainError("not a perfect matching");
    }
  }
}

Configuration Configuration::from_pairs(DegreeSequence seq,
                                        std::span<const std::pair<Point, Point>> pairs) {
  std::vector<PointId> partner(seq.total_points(), kNoPoint);
  auto check = [&](Point p) {
    if (p.bucket >= seq.num_buckets() || p.index >= seq.degree(p.bucket)) {
      throw DomainError("point (" + std::to_string(p.bucket + 1) + "," +
                        std::to_string(p.index + 1) + ") does not exist");
    }
    const PointId id = seq.point_id(p);
    if (partner[id] != kNoPoint) throw DomainError("point appears in two pairs");
    return id;
  };
  for (const auto& [a, b] : pairs) {
    const PointId ia = check(a);
    partner[ia] = ia;  // reserve so that a pair (x, x) is caught
    const PointId ib = check(b);
    partner[ia] = ib;
    partner[ib] = ia;
  }
  if (std::find(partner.begin(), partner.end(), kNoPoint) != partner.end()) {
    throw DomainError("matching leaves a point unpaired");
  }
  return Configuration(std::move(seq), std::move(partner));
}

std::vector<std::pair<PointId, PointId>> Configuration::pairs() const {
  std::vector<std::pair<PointId, PointId>> out;
  out.reserve(pair_count());
  for (PointId i = 0; i < partner_.size(); ++i) {
    if (i < partner_[i]) out.emplace_back(i, partner_[i]);
  }
  return out;
}

bool Configuration::has_pair(Point a, Point b) const {
  return partner_[seq_.point_id(a)] == seq_.point_id(b);
}

namespace {

// Rejects a draw at the first loop or repeated edge.
class SimplicityTracker {
 public:
  explicit SimplicityTracker(const DegreeSequence& seq)
      : stride_(seq.max_degree()), seen_(seq.num_buckets() * stride_), count_(seq.num_buckets()) {}

  void reset() { std::fill(count_.begin(), count_.end(), 0); }

  bool add(Bucket a, Bucket b) {
    if (a == b) return false;
    const Bucket* row = seen_.data() + static_cast<std::size_t>(a) * stride_;
    if (std::find(row, row + count_[a], b) != row + count_[a]) return false;
    seen_[static_cast<std::size_t>(a) * stride_ + count_[a]++] = b;
    seen_[static_cast<std::size_t>(b) * stride_ + count_[b]++] = a;
    return true;
  }

 private:
  std::size_t stride_;
  std::vector<Bucket> seen_;
  std::vector<std::uint32_t> count_;
};

// Pairs the lowest unmatched point with a uniform unmatched point until all
// points are matched. The free points live in `pool`; `where` maps a point to
// its slot so removal is a swap with the last slot.
bool draw_matching(const DegreeSequence& seq, Rng& rng, std::vector<PointId>& partner,
                   SimplicityTracker* tracker) {
  const auto total = static_cast<PointId>(seq.total_points());
  partner.assign(total, kNoPoint);
  std::vector<PointId> pool(total);
  std::vector<PointId> where(total);
  for (PointId i = 0; i < total; ++i) pool[i] = where[i] = i;
  auto take = [&](PointId slot) {
    const PointId x = pool[slot];
    const PointId last = pool.back();
    pool[slot] = last;
    where[last] = slot;
    pool.pop_back();
    return x;
  };
  for (PointId p = 0; p < total; ++p) {
    if (partner[p] != kNoPoint) continue;
    take(where[p]);
    const PointId q = take(static_cast<PointId>(uniform_below(rng, pool.size())));
    partner[p] = q;
    partner[q] = p;
    if (tracker && !tracker->add(seq.bucket_of(p), seq.bucket_of(q))) return false;
  }
  return true;
}

}  // namespace

Configuration sample_configuration(const DegreeSequence& seq, Rng& rng) {
  if (seq.total_points() == 0) {
    throw InvalidDegreeSequence("degree sequence has no points");
  }
  std::vector<PointId> partner;
  draw_matching(seq, rng, partner, nullptr);
  return Configuration(seq, std::move(partner));
}

Configuration sample_configuration(const DegreeSequence& seq, Seed seed) {
  Rng rng = make_rng(seed);
  return sample_configuration(seq, rng);
}

Multigraph project(const Configuration& config) {
  const DegreeSequence& seq = config.degree_sequence();
  std::vector<Edge> edges;
  edges.reserve(config.pair_count());
  for (const auto& [a, b] : config.pairs()) {
    edges.push_back({seq.bucket_of(a), seq.bucket_of(b)});
  }
  return Multigraph(seq.num_buckets(), std::move(edges));
}

bool is_simple(const Multigraph& g) {
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> mark(g.num_vertices(), kNone);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const Incidence& inc : g.incidences(v)) {
      if (inc.to == v || mark[inc.to] == v) return false;
      mark[inc.to] = v;
    }
  }
  return true;
}

SimpleSample sample_simple(const DegreeSequence& seq, Seed seed, std::uint64_t retry_cap) {
  if (seq.total_points() == 0) {
    throw InvalidDegreeSequence("degree sequence has no points");
  }
  Rng rng = make_rng(seed);
  SimplicityTracker tracker(seq);
  std::vector<PointId> partner;
  for (std::uint64_t attempt = 1; attempt <= retry_cap; ++attempt) {
    tracker.reset();
    if (draw_matching(seq, rng, partner, &tracker)) {
      Configuration config(seq, std::move(partner));
      Multigraph graph = project(config);
      return {std::move(config), std::move(graph), attempt};
    }
  }
  throw SamplingFailure("no simple graph after " + std::to_string(retry_cap) + " draws");
}

SimpleSample sample_simple_regular(std::size_t n, std::uint32_t d, Seed seed,
                                   std::uint64_t retry_cap) {
  if (n == 0 || d == 0) throw InvalidDegreeSequence("need n >= 1 and d >= 1");
  return sample_simple(DegreeSequence::regular(n, d), seed, retry_cap);
}

PairProbability pair_probability(std::uint64_t m, std::uint64_t k) {
  if (k > m) {
    throw DomainError("cannot specify " + std::to_string(k) + " disjoint pairs among " +
                      std::to_string(m));
  }
  double exact = 1.0;
  for (std::uint64_t i = 0; i < k; ++i) exact /= static_cast<double>(2 * m - 1 - 2 * i);
  const double asymptotic = std::pow(2.0 * static_cast<double>(m), -static_cast<double>(k));
  return {exact, asymptotic};
}

double matching_count(std::size_t total_points) {
  double count = 1.0;
  for (std::size_t k = total_points; k > 1; k -= 2) count *= static_cast<double>(k - 1);
  return count;
}

std::vector<Configuration> enumerate_matchings(const DegreeSequence& seq) {
  const std::size_t total = seq.total_points();
  if (total > 14) throw DomainError("too many points to enumerate matchings");
  std::vector<Configuration> out;
  std::vector<PointId> partner(total, kNoPoint);
  // Match the lowest free point with each later free point in turn.
  auto recurse = [&](auto&& self) -> void {
    PointId first = 0;
    while (first < total && partner[first] != kNoPoint) ++first;
    if (first == total) {
      out.emplace_back(seq, partner);
      return;
    }
    for (PointId q = first + 1; q < total; ++q) {
      if (partner[q] != kNoPoint) continue;
      partner[first] = q;
      partner[q] = first;
      self(self);
      partner[first] = partner[q] = kNoPoint;
    }
  };
  recurse(recurse);
  return out;
}

void write_configuration(std::ostream& out, const Configuration& config) {
  const DegreeSequence& seq = config.degree_sequence();
  out << seq.num_buckets();
  for (std::uint32_t d : seq.degrees()) out << ' ' << d;
  out << '\n';
  for (const auto& [a, b] : config.pairs()) {
    const Point pa = seq.point(a);
    const Point pb = seq.point(b);
    out << pa.bucket + 1 << ' ' << pa.index + 1 << ' ' << pb.bucket + 1 << ' ' << pb.index + 1
        << '\n';
  }
}

Configuration read_configuration(std::istream& in, std::vector<std::string>* trailing) {
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw FormatError("empty configuration input");
  std::istringstream header(line);
  std::size_t n = 0;
  if (!(header >> n)) throw FormatError("bad configuration header");
  std::vector<std::uint32_t> degrees(n);
  for (auto& d : degrees) {
    if (!(header >> d)) throw FormatError("header lists fewer than n degrees");
  }
  std::string extra;
  if (header >> extra) throw FormatError("header lists more than n degrees");
  DegreeSequence seq(std::move(degrees));

  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(seq.pair_count());
  while (next_line()) {
    const auto start = line.find_first_not_of(" \t");
    const auto word_end = line.find_first_of(" \t", start);
    const std::string first = line.substr(start, word_end - start);
    if (!first.empty() && first.back() == ':') {
      if (!trailing) throw FormatError("unexpected section '" + first + "'");
      trailing->push_back(line.substr(start));
      continue;
    }
    if (trailing && !trailing->empty()) throw FormatError("pair line after a section line");
    std::istringstream row(line);
    std::uint32_t b1, p1, b2, p2;
    if (!(row >> b1 >> p1 >> b2 >> p2) || b1 == 0 || p1 == 0 || b2 == 0 || p2 == 0) {
      throw FormatError("bad pair line: " + line);
    }
    pairs.push_back({{b1 - 1, p1 - 1}, {b2 - 1, p2 - 1}});
  }
  try {
    return Configuration::from_pairs(std::move(seq), pairs);
  } catch (const DomainError& e) {
    throw FormatError(std::string("invalid matching: ") + e.what());
  }
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace perclab
