#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "perclab/decomposition.hpp"
#include "perclab/errors.hpp"
#include "perclab/expansion.hpp"
#include "perclab/pairing_model.hpp"

using namespace perclab;

TEST_CASE("exact expansion of small named graphs") {
  const auto k4 = exact_vertex_expansion(oracle::complete(4));
  CHECK(k4.ratio == Ratio{1, 1});
  CHECK(k4.witness == std::vector<Vertex>{0, 1});
  CHECK(exact_edge_expansion(oracle::complete(4)).ratio == Ratio{2, 3});

  const auto c6 = exact_vertex_expansion(oracle::cycle(6));
  CHECK(c6.ratio == Ratio{2, 3});
  CHECK(c6.witness == std::vector<Vertex>{0, 1, 2});
  CHECK(exact_edge_expansion(oracle::cycle(6)).ratio == Ratio{1, 3});

  CHECK(exact_vertex_expansion(oracle::path(10)).ratio == Ratio{1, 5});
  CHECK_THROWS_AS(exact_vertex_expansion(oracle::path(21)), DomainError);
  CHECK_THROWS_AS(exact_vertex_expansion(Multigraph(1, {})), DomainError);
}

TEST_CASE("exact expansion matches brute force with the least witness") {
  Rng rng = make_rng(31);
  for (int rep = 0; rep < 150; ++rep) {
    const std::size_t n = 2 + uniform_below(rng, 10);
    Multigraph g = rep % 2 ? oracle::random_graph(n, 0.2 + 0.5 * uniform01(rng), rng)
                           : [&] {
                               std::vector<std::uint32_t> degs(n, 3);
                               if (n % 2) degs[0] = 2;
                               return project(sample_configuration(DegreeSequence(degs), rng));
                             }();
    const auto mine = exact_vertex_expansion(g);
    const auto ref = oracle::vertex_expansion(g);
    CHECK(mine.ratio == Ratio{ref.num, ref.den});
    CHECK(mine.witness == ref.witness);
    CHECK(outside_neighbours(g, mine.witness) * ref.den == ref.num * mine.witness.size());

    const auto edge = exact_edge_expansion(g);
    const auto eref = oracle::edge_expansion(g);
    CHECK(edge.ratio == Ratio{eref.num, eref.den});
  }
}

TEST_CASE("vertex and edge expansion agree up to the degree") {
  Rng rng = make_rng(32);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 4 + uniform_below(rng, 10);
    const auto g = oracle::random_graph(n, 0.3 + 0.4 * uniform01(rng), rng);
    if (!is_connected(g)) continue;
    const double beta = exact_vertex_expansion(g).ratio.value();
    const double gamma = exact_edge_expansion(g).ratio.value();
    const double d = static_cast<double>(g.max_degree());
    CHECK(gamma <= beta * d + 1e-12);
    CHECK(beta <= gamma * d + 1e-12);
  }
}

TEST_CASE("spectral gap of cycles and complete graphs") {
  for (std::size_t n : {5, 6, 9, 20}) {
    const auto s = spectral_lower_bound(oracle::cycle(n));
    CHECK(s.converged);
    CHECK(s.lambda2 == doctest::Approx(1 - std::cos(2 * std::numbers::pi / n)).epsilon(1e-6));
    CHECK(s.lower_bound == doctest::Approx(s.lambda2 / 2));
  }
  const auto k4 = spectral_lower_bound(oracle::complete(4));
  CHECK(k4.lambda2 == doctest::Approx(4.0 / 3).epsilon(1e-6));
  const auto c6 = spectral_lower_bound(oracle::cycle(6));
  CHECK(c6.lambda2 == doctest::Approx(0.5).epsilon(1e-6));

  const auto split = spectral_lower_bound(Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
  CHECK_FALSE(split.connected);
  CHECK(split.lower_bound == 0);

  // large sparse cycle: only the Lanczos route is practical
  const auto big = spectral_lower_bound(oracle::cycle(400));
  CHECK(big.lambda2 == doctest::Approx(1 - std::cos(2 * std::numbers::pi / 400)).epsilon(1e-4));
}

TEST_CASE("bounds bracket the exact value") {
  Rng rng = make_rng(33);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 4 + uniform_below(rng, 12);
    const auto g = oracle::random_graph(n, 0.25 + 0.4 * uniform01(rng), rng);
    if (!is_connected(g)) continue;
    ++checked;
    CertifyOptions opts;
    opts.spectral.seed = rng();
    const auto cert = certify(g, opts);
    REQUIRE(cert.exact_beta);
    const double beta = cert.exact_beta->ratio.value();
    REQUIRE(cert.lower_bound);
    CHECK(cert.lower_bound->value <= beta + 1e-9);
    if (cert.upper_bound) CHECK(beta <= cert.upper_bound->value + 1e-12);
  }
}

TEST_CASE("degree-2 path bound") {
  CHECK_FALSE(path_upper_bound(1, 10));
  CHECK(*path_upper_bound(3, 10) == doctest::Approx(1.0));
  CHECK(*path_upper_bound(5, 10) == doctest::Approx(0.5));
  CHECK_FALSE(path_upper_bound(7, 10));

  // The run of 7 in C_10 plus a chord does not give 1/3: its half-run set
  // is not a legal witness and the exact value is larger.
  const Multigraph chord(10, [] {
    std::vector<Edge> e;
    for (Vertex v = 0; v < 10; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % 10)});
    e.push_back({0, 2});
    return e;
  }());
  CHECK(longest_deg2_run(chord).length == 7);
  CHECK(exact_vertex_expansion(chord).ratio == Ratio{2, 5});

  // where it applies, the bound holds
  for (std::size_t len : {2, 3, 4, 5}) {
    std::vector<Edge> e;
    Vertex next = 2;
    for (std::size_t rep = 0; rep < 3; ++rep) {
      Vertex prev = 0;
      for (std::size_t i = 0; i < len; ++i) {
        e.push_back({prev, next});
        prev = next++;
      }
      e.push_back({prev, 1});
    }
    const Multigraph theta(next, std::move(e));
    const auto bound = path_upper_bound(len, theta.num_vertices());
    REQUIRE(bound);
    CHECK(exact_vertex_expansion(theta).ratio.value() <= *bound + 1e-12);
  }
}

TEST_CASE("diameter and its expansion bound") {
  const auto k4 = diameter_check(oracle::complete(4), 1.0);
  CHECK(k4.diameter == 1u);
  CHECK(k4.bound == doctest::Approx(4.0));
  CHECK(k4.pass);
  const auto c6 = diameter_check(oracle::cycle(6), 2.0 / 3);
  CHECK(c6.diameter == 3u);
  CHECK(c6.bound == doctest::Approx(2 * std::log(3.0) / std::log(5.0 / 3) + 2));
  CHECK(c6.pass);
  const auto p10 = diameter_check(oracle::path(10), 0.2);
  CHECK(p10.diameter == 9u);
  CHECK(p10.pass);
  CHECK_THROWS_AS(diameter_check(oracle::path(10), 0.0), DomainError);
  CHECK_FALSE(diameter(Multigraph(2, {})));

  Rng rng = make_rng(34);
  for (int rep = 0; rep < 50; ++rep) {
    const auto g = oracle::random_graph(3 + uniform_below(rng, 12), 0.3, rng);
    const long ref = oracle::diameter(g);
    const auto mine = diameter(g);
    CHECK(mine.has_value() == (ref >= 0));
    if (mine) CHECK(static_cast<long>(*mine) == ref);
  }
}

TEST_CASE("reinstatement expansion check") {
  const auto c8 = oracle::cycle(8);
  const std::vector<Vertex> w{0};
  std::vector<bool> keep(8, true);
  keep[0] = false;
  const auto p7 = induced_subgraph(c8, keep).graph;
  const auto check = reinstatement_expansion_check(p7, w, c8);
  CHECK(check.precondition_ok);
  CHECK(check.beta_before == Ratio{1, 3});
  CHECK(check.beta_after == Ratio{1, 2});
  CHECK(check.expansion_ok);
  CHECK(check.pass);

  const auto trivial = reinstatement_expansion_check(c8, {}, c8);
  CHECK(trivial.pass);

  const std::vector<Vertex> close{0, 2};
  keep.assign(8, true);
  keep[0] = keep[2] = false;
  const auto bad = reinstatement_expansion_check(induced_subgraph(c8, keep).graph, close, c8);
  CHECK_FALSE(bad.precondition_ok);
  REQUIRE(bad.too_close);
  CHECK(*bad.too_close == std::pair<Vertex, Vertex>{0, 2});

  CHECK_THROWS_AS(reinstatement_expansion_check(c8, w, c8), DomainError);
}
