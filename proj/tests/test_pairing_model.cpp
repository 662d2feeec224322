#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "perclab/errors.hpp"
#include "perclab/pairing_model.hpp"
#include "perclab/stats.hpp"

using namespace perclab;

namespace {

std::vector<PointId> key(const Configuration& c) { return {c.partners().begin(), c.partners().end()}; }

}  // namespace

TEST_CASE("degree sequences validate and index points") {
  CHECK_THROWS_AS(DegreeSequence({1, 2}), InvalidDegreeSequence);
  CHECK_THROWS_AS(DegreeSequence({4, 2}, 3), InvalidDegreeSequence);
  const DegreeSequence seq({2, 0, 3, 1});
  CHECK(seq.total_points() == 6);
  CHECK(seq.pair_count() == 3);
  CHECK(seq.first_point(2) == 2);
  CHECK(seq.point_id({3, 0}) == 5);
  CHECK(seq.bucket_of(4) == 2);
  CHECK(seq.point(4) == Point{2, 2});
  CHECK(DegreeSequence::regular(5, 4).total_points() == 20);
}

TEST_CASE("configurations must be fixed-point-free involutions") {
  const auto seq = DegreeSequence::regular(2, 1);
  CHECK_NOTHROW(Configuration(seq, {1, 0}));
  CHECK_THROWS_AS(Configuration(seq, {0, 1}), DomainError);
  CHECK_THROWS_AS(Configuration(seq, {1}), DomainError);
}

TEST_CASE("matching enumeration agrees with the recursive oracle") {
  for (const auto& degs : std::vector<std::vector<std::uint32_t>>{
           {2, 2, 2}, {1, 1}, {3, 1, 2, 2}, {4, 2}, {2, 2, 2, 2}, {3, 3, 3, 3}}) {
    const DegreeSequence seq(degs);
    const auto mine = enumerate_matchings(seq);
    const auto ref = oracle::all_matchings(static_cast<int>(seq.total_points()));
    CHECK(mine.size() == ref.size());
    CHECK(static_cast<double>(mine.size()) == matching_count(seq.total_points()));
    std::set<std::vector<PointId>> a, b;
    for (const auto& c : mine) a.insert(key(c));
    for (const auto& r : ref) b.insert(std::vector<PointId>(r.begin(), r.end()));
    CHECK(a == b);
  }
  CHECK(enumerate_matchings(DegreeSequence::regular(3, 2)).size() == 15);
  CHECK_THROWS_AS(enumerate_matchings(DegreeSequence::regular(4, 4)), DomainError);
}

TEST_CASE("sampled matchings are uniform over the 15 matchings of n=3, d=2") {
  const auto seq = DegreeSequence::regular(3, 2);
  std::map<std::vector<PointId>, std::uint64_t> seen;
  for (const auto& c : enumerate_matchings(seq)) seen[key(c)] = 0;
  Rng rng = make_rng(99);
  for (int i = 0; i < 15'000; ++i) ++seen.at(key(sample_configuration(seq, rng)));
  std::vector<std::uint64_t> counts;
  for (const auto& [k, v] : seen) counts.push_back(v);
  const auto test = stats::chi_square_uniform(counts);
  CHECK(test.dof == 14);
  CHECK(test.p_value > 1e-3);
}

TEST_CASE("sampling is a pure function of the seed") {
  const auto seq = DegreeSequence::regular(50, 3);
  CHECK(sample_configuration(seq, Seed{5}) == sample_configuration(seq, Seed{5}));
  CHECK_FALSE(sample_configuration(seq, Seed{5}) == sample_configuration(seq, Seed{6}));
  CHECK_THROWS_AS(sample_configuration(DegreeSequence({0, 0}), Seed{1}), InvalidDegreeSequence);
}

TEST_CASE("pair probability") {
  const auto p = pair_probability(6, 1);
  CHECK(p.exact == doctest::Approx(1.0 / 11).epsilon(1e-15));
  CHECK(p.asymptotic == doctest::Approx(1.0 / 12));
  CHECK(pair_probability(6, 2).exact == doctest::Approx(1.0 / 99));
  CHECK(pair_probability(3, 3).exact == doctest::Approx(1.0 / 15));
  CHECK_THROWS_AS(pair_probability(2, 3), DomainError);

  // Empirical: m = 6 points pairs, one fixed pair.
  const auto seq = DegreeSequence::regular(4, 3);
  Rng rng = make_rng(3);
  const int samples = 50'000;
  int hits = 0;
  for (int i = 0; i < samples; ++i) hits += sample_configuration(seq, rng).has_pair({0, 0}, {1, 0});
  const double sigma = std::sqrt((1.0 / 11) * (10.0 / 11) / samples);
  CHECK(std::abs(hits / double(samples) - 1.0 / 11) < 4 * sigma);
}

TEST_CASE("projection keeps one edge per pair") {
  const auto seq = DegreeSequence({2, 2, 2});
  // loop at bucket 1, double edge between 0 and 2
  const std::pair<Point, Point> pairs[] = {{{0, 0}, {2, 0}}, {{0, 1}, {2, 1}}, {{1, 0}, {1, 1}}};
  const auto c = Configuration::from_pairs(seq, pairs);
  const auto g = project(c);
  CHECK(g.num_edges() == 3);
  CHECK(g.degree(1) == 2);
  CHECK_FALSE(is_simple(g));
  CHECK(c.has_pair({1, 1}, {1, 0}));
}

TEST_CASE("simple rejection sampling") {
  SUBCASE("result is simple and regular") {
    for (Seed s = 1; s <= 20; ++s) {
      const auto sample = sample_simple_regular(30, 4, s);
      CHECK(is_simple(sample.graph));
      CHECK(sample.attempts >= 1);
      for (Vertex v = 0; v < 30; ++v) CHECK(sample.graph.degree(v) == 4);
    }
  }
  SUBCASE("impossible sequences exhaust the retry cap") {
    CHECK_THROWS_AS(sample_simple_regular(2, 3, 1, 50), SamplingFailure);
  }
  SUBCASE("uniform over the 70 labelled 2-regular simple graphs on 6 vertices") {
    std::map<std::vector<Edge>, std::uint64_t> seen;
    for (Seed s = 0; s < 14'000; ++s) {
      auto edges = canonical_edges(sample_simple_regular(6, 2, s).graph);
      ++seen[edges];
    }
    CHECK(seen.size() == 70);
    std::vector<std::uint64_t> counts;
    for (const auto& [k, v] : seen) counts.push_back(v);
    CHECK(stats::chi_square_uniform(counts).p_value > 1e-3);
  }
}

TEST_CASE("configuration text round trip") {
  const auto c = sample_configuration(DegreeSequence({3, 1, 2, 2}), Seed{11});
  std::stringstream buf;
  write_configuration(buf, c);
  CHECK(buf.str().rfind("4 3 1 2 2\n", 0) == 0);
  CHECK(read_configuration(buf) == c);

  std::istringstream trailing("2 1 1\n1 1 2 1\nextra: 1\n");
  CHECK_THROWS_AS(read_configuration(trailing), FormatError);
  std::istringstream again("2 1 1\n1 1 2 1\nextra: 1\n");
  std::vector<std::string> rest;
  read_configuration(again, &rest);
  CHECK(rest.size() == 1);

  std::istringstream bad("2 1 1\n1 1 1 1\n");
  CHECK_THROWS(read_configuration(bad));

  std::ostringstream edges;
  write_edge_list(edges, project(Configuration(DegreeSequence({2}), {1, 0})));
  CHECK(edges.str() == "1 1\n");
}
