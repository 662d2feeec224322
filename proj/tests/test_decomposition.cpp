#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "perclab/decomposition.hpp"
#include "perclab/errors.hpp"
#include "perclab/pairing_model.hpp"
#include "perclab/percolation.hpp"

using namespace perclab;

namespace {

// Two branch vertices 0 and 1 joined by paths with the given numbers of
// internal vertices.
Multigraph theta(std::initializer_list<std::size_t> lengths) {
  std::vector<Edge> edges;
  Vertex next = 2;
  for (std::size_t len : lengths) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Multigraph(next, std::move(edges));
}

Multigraph subdivided_k4(std::size_t per_edge) {
  std::vector<Edge> edges;
  Vertex next = 4;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      Vertex prev = u;
      for (std::size_t i = 0; i < per_edge; ++i) {
        edges.push_back({prev, next});
        prev = next++;
      }
      edges.push_back({prev, v});
    }
  }
  return Multigraph(next, std::move(edges));
}

}  // namespace

TEST_CASE("peeling agrees with the brute-force 2-core") {
  Rng rng = make_rng(21);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 1 + uniform_below(rng, 11);
    Multigraph g;
    if (rep % 3 == 0) {
      std::vector<std::uint32_t> degs(n);
      std::uint32_t total = 0;
      for (auto& d : degs) total += d = uniform_below(rng, 4);
      if (total % 2) {
        ++degs[0];
        ++total;
      }
      g = total ? project(sample_configuration(DegreeSequence(degs), rng)) : Multigraph(n, {});
    } else {
      g = oracle::random_graph(n, 0.1 + 0.3 * uniform01(rng), rng);
    }
    const auto expect = oracle::two_core_members(g);
    const auto fifo = two_core(g);
    const auto shuffled = two_core(g, rng);
    CHECK(fifo.in_core == expect);
    CHECK(shuffled.in_core == expect);
    CHECK(fifo.removal_order.size() + fifo.core.num_vertices() == n);
    if (fifo.core.num_vertices()) CHECK(fifo.core.min_degree() >= 2);
  }
}

TEST_CASE("random trees have an empty core and form one rootless bush") {
  Rng rng = make_rng(5);
  for (std::size_t n = 2; n < 40; ++n) {
    const auto tree = oracle::random_tree(n, rng);
    CHECK(tree.num_edges() == n - 1);
    CHECK(is_connected(tree));
    const auto dec = decompose(tree, n);
    CHECK(dec.core.core.num_vertices() == 0);
    REQUIRE(dec.bushes.size() == 1);
    CHECK_FALSE(dec.bushes[0].root);
    CHECK(dec.bushes[0].vertices.size() == n);
    REQUIRE(dec.components.components.size() == 1);
    CHECK(dec.components.components[0].kind == ComponentKind::tree);
  }
}

TEST_CASE("cycles are isolated cycles with run length n-1") {
  const auto c = oracle::cycle(7);
  const auto core = two_core(c);
  CHECK(core.core.num_vertices() == 7);
  const auto k = kernel(core.core);
  CHECK(k.kernel.num_vertices() == 0);
  REQUIRE(k.isolated_cycles.size() == 1);
  CHECK(k.isolated_cycles[0].front() == 0);
  CHECK(k.isolated_cycles[0].size() == 7);
  const auto run = longest_deg2_run(core.core);
  CHECK(run.length == 6);
  CHECK(run.from_cycle);
  CHECK(count_deg2_paths(core.core, 6).cycles == 1);
  // the giant is not counted among the isolated components
  CHECK(classify_components(c, 3).isolated_cycles == 0);
  const Multigraph two(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                            {7, 8}, {8, 9}, {9, 7}});
  CHECK(classify_components(two, 3).isolated_cycles == 1);
  CHECK(kernel(two).isolated_cycles.size() == 2);
}

TEST_CASE("theta graph kernel") {
  const auto g = theta({1, 2, 3});
  const auto k = kernel(g);
  CHECK(k.kernel.num_vertices() == 2);
  CHECK(k.kernel.num_edges() == 3);
  std::vector<std::size_t> lengths;
  for (const auto& p : k.edge_paths) lengths.push_back(p.size());
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{1, 2, 3});
  CHECK(longest_deg2_run(k).length == 3);
  CHECK_FALSE(longest_deg2_run(k).from_cycle);
  CHECK(count_deg2_paths(k, 2).count == 2);

  const auto back = resubdivide(k);
  CHECK(canonical_edges(Multigraph(g.num_vertices(), back)) == canonical_edges(g));
  // parallel edges with no internal vertices stay parallel kernel edges
  CHECK(kernel(theta({0, 0, 1})).kernel.num_edges() == 3);
}

TEST_CASE("subdivided K4") {
  const auto g = subdivided_k4(2);
  const auto k = kernel(g);
  CHECK(k.kernel.num_vertices() == 4);
  CHECK(k.kernel.num_edges() == 6);
  CHECK(k.kernel.min_degree() == 3);
  CHECK(longest_deg2_run(g).length == 2);
  CHECK(count_deg2_paths(g, 2).count == 6);
  CHECK(count_deg2_paths(g, 3).count == 0);
  CHECK_THROWS_AS(count_deg2_paths(g, 0), DomainError);
  CHECK(canonical_edges(Multigraph(g.num_vertices(), resubdivide(k))) == canonical_edges(g));
}

TEST_CASE("kernel requires minimum degree two") {
  CHECK_THROWS_AS(kernel(oracle::path(3)), DomainError);
  CHECK_THROWS_AS(longest_deg2_run(oracle::path(3)), DomainError);
}

TEST_CASE("bushes hang from their root") {
  // triangle 0-1-2 with the path 2-3-4 and an isolated vertex 5
  const Multigraph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  const auto bs = bushes(g);
  std::size_t rooted = 0, rootless = 0;
  for (const auto& b : bs) {
    if (b.root) {
      ++rooted;
      CHECK(*b.root == 2);
      CHECK(b.vertices == std::vector<Vertex>{2, 3, 4});
    } else {
      ++rootless;
      CHECK(b.vertices == std::vector<Vertex>{5});
    }
  }
  CHECK(rooted == 1);
  CHECK(rootless == 1);
  const auto dec = decompose(g, 2);
  CHECK(dec.max_bush_size() == 3);
  CHECK(dec.isolated_trees().size() == 1);
  CHECK(dec.components.giant_size() == 5);
  CHECK(dec.components.others_are_isolated_vertices);
}

TEST_CASE("component classification") {
  // two triangles of equal size: the giant is the one with the smaller label
  const Multigraph g(9, {{3, 4}, {4, 5}, {5, 3}, {0, 1}, {1, 2}, {2, 0}, {6, 7}});
  const auto rep = classify_components(g, 1);
  REQUIRE(rep.giant);
  CHECK(rep.components[*rep.giant].vertices.front() == 0);
  CHECK(rep.isolated_cycles == 1);
  CHECK(rep.isolated_trees == 2);
  CHECK(rep.max_tree_size == 2);
  CHECK_FALSE(rep.trees_within_bound);
  CHECK_FALSE(rep.others_are_isolated_vertices);
  CHECK_THROWS_AS(classify_components(g, 0), DomainError);
}

TEST_CASE("decomposition invariants on percolated random graphs") {
  for (Seed s = 1; s <= 10; ++s) {
    const auto sample = sample_simple_regular(2'000, 3, s);
    Rng rng = make_rng(s);
    const auto out = apply_deletion(sample.config, choose_deletion_set(2'000, 0.2, rng));
    const auto g = project(out.survivors);
    const auto dec = decompose(g, 7);
    std::size_t total = 0;
    for (const auto& c : dec.components.components) total += c.vertices.size();
    CHECK(total == g.num_vertices());
    std::size_t bush_vertices = 0, roots = 0;
    for (const auto& b : dec.bushes) {
      bush_vertices += b.vertices.size();
      roots += b.root ? 1 : 0;
    }
    // every non-core vertex is in exactly one bush; roots are core vertices
    CHECK(bush_vertices - roots == g.num_vertices() - dec.core.core.num_vertices());
    std::uint64_t census_total = std::accumulate(dec.core_census.begin(), dec.core_census.end(),
                                                 std::uint64_t{0});
    CHECK(census_total == dec.core.core.num_vertices());
    if (dec.core_census.size() > 1) CHECK(dec.core_census[1] == 0);
    CHECK(dec.core.core.num_edges() <= g.num_edges());
  }
}
