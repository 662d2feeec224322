#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace perclab {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One end of an edge as seen from a vertex.
struct Incidence {
  Vertex to;
  EdgeId edge;
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed. A loop appears twice in its vertex's incidence list, so
// degree(v) counts it as 2 and the handshake identity sum(degree) = 2|E| holds.
// Adjacency is stored in compressed rows built once at construction.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Incidence> incidences(Vertex v) const {
    return {incidences_.data() + offsets_[v], degree(v)};
  }

  std::size_t min_degree() const;
  std::size_t max_degree() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

// Subgraph induced by the vertices with keep[v] set, relabelled 0..k-1 in
// increasing order of the original label.
struct InducedSubgraph {
  Multigraph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<bool>& keep);

// Connected component index per vertex, components numbered by smallest vertex.
std::vector<std::uint32_t> component_labels(const Multigraph& g, std::size_t* num_components = nullptr);

bool is_connected(const Multigraph& g);

// Edges as sorted (min, max) pairs, themselves sorted; equal iff the two
// graphs have the same labelled edge multiset.
std::vector<Edge> canonical_edges(const Multigraph& g);

}  // namespace perclab
