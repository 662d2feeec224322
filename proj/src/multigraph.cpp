#include "perclab/multigraph.hpp"

#include <algorithm>

#include "perclab/errors.hpp"
#include "perclab/union_find.hpp"

namespace perclab {

Multigraph::Multigraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)), offsets_(num_vertices + 1, 0) {
  for (const Edge& e : edges_) {
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw DomainError("edge endpoint out of range");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) offsets_[v + 1] += offsets_[v];
  incidences_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidences_[fill[e.u]++] = {e.v, id};
    incidences_[fill[e.v]++] = {e.u, id};
  }
}

std::size_t Multigraph::min_degree() const {
  std::size_t best = num_vertices_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < num_vertices_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices_; ++v) best = std::max(best, degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<bool>& keep) {
  constexpr Vertex kDropped = ~Vertex{0};
  std::vector<Vertex> relabel(g.num_vertices(), kDropped);
  InducedSubgraph out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep[v]) {
      relabel[v] = static_cast<Vertex>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] != kDropped && relabel[e.v] != kDropped) {
      edges.push_back({relabel[e.u], relabel[e.v]});
    }
  }
  out.graph = Multigraph(out.to_parent.size(), std::move(edges));
  return out;
}

std::vector<std::uint32_t> component_labels(const Multigraph& g, std::size_t* num_components) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> root_label(g.num_vertices(), kUnset);
  std::vector<std::uint32_t> label(g.num_vertices());
  std::uint32_t next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto r = uf.find(v);
    if (root_label[r] == kUnset) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (num_components) *num_components = next;
  return label;
}

bool is_connected(const Multigraph& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return count <= 1;
}

std::vector<Edge> canonical_edges(const Multigraph& g) {
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  for (Edge& e : out) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

}  // namespace perclab
