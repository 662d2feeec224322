#pragma once

// Structural decomposition of a multigraph: 2-core, kernel, bushes,
// components and runs of degree-2 vertices in the core.
//
// Run lengths are always counted in internal degree-2 vertices, not edges: a
// path u - x1 - ... - xk - w between branch vertices u, w has run k. An
// isolated cycle of length L has run L-1 and is flagged as cyclic.

#include <cstdint>
#include <optional>
#include <vector>

#include "perclab/multigraph.hpp"
#include "perclab/rng.hpp"

namespace perclab {

struct CoreResult {
  Multigraph core;                    // induced on surviving vertices, order-preserving labels
  std::vector<Vertex> to_parent;      // core vertex -> input vertex
  std::vector<bool> in_core;          // per input vertex
  std::vector<Vertex> removal_order;  // input vertices in the order they were peeled
};

// Repeatedly removes a vertex of degree 0 or 1. The default order is a FIFO
// queue seeded in ascending label order; the second overload removes a
// uniformly random eligible vertex at each step. The result does not depend
// on the order.
CoreResult two_core(const Multigraph& g);
CoreResult two_core(const Multigraph& g, Rng& rng);

struct KernelResult {
  Multigraph kernel;               // branch (degree >= 3) vertices of the core
  std::vector<Vertex> to_core;     // kernel vertex -> core vertex
  // Per kernel edge, the suppressed degree-2 core vertices in walk order
  // from edge.u to edge.v.
  std::vector<std::vector<Vertex>> edge_paths;
  // Core components that are cycles, each listed in cycle order starting at
  // its smallest vertex. They have no branch vertex and are left out of the
  // kernel.
  std::vector<std::vector<Vertex>> isolated_cycles;
};

// Suppresses every degree-2 vertex of a graph with minimum degree >= 2.
// Throws DomainError otherwise.
KernelResult kernel(const Multigraph& core);

// Inverse of kernel(): subdivides each kernel edge by its recorded path.
// Returns the edges over core labels.
std::vector<Edge> resubdivide(const KernelResult& k);

struct Bush {
  std::vector<Vertex> vertices;  // ascending, root included
  std::optional<Vertex> root;    // the vertex on a cyclic edge; none for an isolated tree
};

// Components of the subgraph of non-cyclic (non-2-core) edges. An isolated
// vertex forms a rootless bush of size 1. Ordered by smallest vertex.
std::vector<Bush> bushes(const Multigraph& g);
std::vector<Bush> bushes(const Multigraph& g, const CoreResult& core);

enum class ComponentKind { tree, cycle, other };
const char* to_string(ComponentKind kind);

struct Component {
  std::vector<Vertex> vertices;  // ascending
  std::size_t edges = 0;
  ComponentKind kind = ComponentKind::other;
};

struct ComponentReport {
  std::vector<Component> components;  // ordered by smallest vertex
  std::optional<std::size_t> giant;   // index of the largest; ties go to the smaller label
  std::size_t size_bound = 0;         // K
  // The counts below and the flags cover the components other than the giant.
  std::size_t isolated_trees = 0;
  std::size_t isolated_cycles = 0;
  std::size_t other_components = 0;
  std::size_t max_tree_size = 0;      // over non-giant trees
  bool trees_within_bound = true;     // every non-giant tree has <= K vertices
  bool others_are_isolated_vertices = true;

  std::size_t giant_size() const { return giant ? components[*giant].vertices.size() : 0; }
};

// Throws DomainError if size_bound is 0.
ComponentReport classify_components(const Multigraph& g, std::size_t size_bound);

struct RunLength {
  std::size_t length = 0;
  bool from_cycle = false;  // the maximum is attained only on an isolated cycle
};

// Longest run of consecutive internal degree-2 vertices. Throws DomainError
// when the input has a vertex of degree < 2.
RunLength longest_deg2_run(const Multigraph& core);
RunLength longest_deg2_run(const KernelResult& k);

struct RunCount {
  std::size_t count = 0;   // maximal runs with at least k internal vertices
  std::size_t cycles = 0;  // how many of those are isolated cycles (counted once each)
};

// Throws DomainError when k == 0 or the input has a vertex of degree < 2.
RunCount count_deg2_paths(const Multigraph& core, std::size_t k);
RunCount count_deg2_paths(const KernelResult& kr, std::size_t k);

struct Decomposition {
  CoreResult core;
  KernelResult kernel;
  std::vector<Bush> bushes;
  ComponentReport components;
  RunLength longest_run;
  std::vector<std::uint64_t> core_census;  // index j = core vertices of degree j, 0..max
  std::vector<Bush> isolated_trees() const;
  std::size_t max_bush_size() const;
};

Decomposition decompose(const Multigraph& g, std::size_t size_bound);

}  // namespace perclab
