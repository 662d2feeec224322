#include "perclab/decomposition.hpp"

#include <algorithm>

#include "perclab/errors.hpp"
#include "perclab/union_find.hpp"

namespace perclab {

namespace {

// Peels vertices of degree <= 1 in the order the frontier hands them out.
// Frontier provides push(v), pop() and empty().
template <typename Frontier>
CoreResult peel(const Multigraph& g, Frontier& frontier) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> degree(n);
  std::vector<bool> queued(n, false);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(g.degree(v));
    if (degree[v] <= 1) {
      queued[v] = true;
      frontier.push(v);
    }
  }

  CoreResult out;
  out.in_core.assign(n, true);
  while (!frontier.empty()) {
    const Vertex v = frontier.pop();
    out.in_core[v] = false;
    out.removal_order.push_back(v);
    for (const Incidence& inc : g.incidences(v)) {
      const Vertex w = inc.to;
      if (!out.in_core[w]) continue;
      if (--degree[w] <= 1 && !queued[w]) {
        queued[w] = true;
        frontier.push(w);
      }
    }
  }
  auto sub = induced_subgraph(g, out.in_core);
  out.core = std::move(sub.graph);
  out.to_parent = std::move(sub.to_parent);
  return out;
}

class FifoFrontier {
 public:
  void push(Vertex v) { items_.push_back(v); }
  Vertex pop() { return items_[head_++]; }
  bool empty() const { return head_ == items_.size(); }

 private:
  std::vector<Vertex> items_;
  std::size_t head_ = 0;
};

class RandomFrontier {
 public:
  explicit RandomFrontier(Rng& rng) : rng_(rng) {}
  void push(Vertex v) { items_.push_back(v); }
  Vertex pop() {
    const auto slot = uniform_below(rng_, items_.size());
    const Vertex v = items_[slot];
    items_[slot] = items_.back();
    items_.pop_back();
    return v;
  }
  bool empty() const { return items_.empty(); }

 private:
  Rng& rng_;
  std::vector<Vertex> items_;
};

void require_min_degree_two(const Multigraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2) {
      throw DomainError("vertex " + std::to_string(v + 1) + " has degree " +
                        std::to_string(g.degree(v)) + " < 2");
    }
  }
}

}  // namespace

CoreResult two_core(const Multigraph& g) {
  FifoFrontier frontier;
  return peel(g, frontier);
}

CoreResult two_core(const Multigraph& g, Rng& rng) {
  RandomFrontier frontier(rng);
  return peel(g, frontier);
}

KernelResult kernel(const Multigraph& core) {
  require_min_degree_two(core);
  const std::size_t n = core.num_vertices();
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> kernel_id(n, kNone);
  KernelResult out;
  for (Vertex v = 0; v < n; ++v) {
    if (core.degree(v) >= 3) {
      kernel_id[v] = static_cast<Vertex>(out.to_core.size());
      out.to_core.push_back(v);
    }
  }

  std::vector<bool> edge_done(core.num_edges(), false);
  std::vector<bool> vertex_done(n, false);
  std::vector<Edge> kernel_edges;
  for (Vertex u : out.to_core) {
    vertex_done[u] = true;
    for (const Incidence& start : core.incidences(u)) {
      if (edge_done[start.edge]) continue;
      edge_done[start.edge] = true;
      std::vector<Vertex> path;
      EdgeId via = start.edge;
      Vertex cur = start.to;
      while (core.degree(cur) == 2) {
        path.push_back(cur);
        vertex_done[cur] = true;
        const auto inc = core.incidences(cur);
        const Incidence& next = inc[0].edge == via ? inc[1] : inc[0];
        via = next.edge;
        edge_done[via] = true;
        cur = next.to;
      }
      kernel_edges.push_back({kernel_id[u], kernel_id[cur]});
      out.edge_paths.push_back(std::move(path));
    }
  }

  // Whatever is left consists of degree-2 vertices only: disjoint cycles.
  for (Vertex v = 0; v < n; ++v) {
    if (vertex_done[v]) continue;
    std::vector<Vertex> cycle{v};
    vertex_done[v] = true;
    EdgeId via = core.incidences(v)[0].edge;
    Vertex cur = core.incidences(v)[0].to;
    while (cur != v) {
      cycle.push_back(cur);
      vertex_done[cur] = true;
      const auto inc = core.incidences(cur);
      const Incidence& next = inc[0].edge == via ? inc[1] : inc[0];
      via = next.edge;
      cur = next.to;
    }
    out.isolated_cycles.push_back(std::move(cycle));
  }
  out.kernel = Multigraph(out.to_core.size(), std::move(kernel_edges));
  return out;
}

std::vector<Edge> resubdivide(const KernelResult& k) {
  std::vector<Edge> out;
  for (EdgeId e = 0; e < k.kernel.num_edges(); ++e) {
    Vertex prev = k.to_core[k.kernel.edge(e).u];
    for (Vertex x : k.edge_paths[e]) {
      out.push_back({prev, x});
      prev = x;
    }
    out.push_back({prev, k.to_core[k.kernel.edge(e).v]});
  }
  for (const auto& cycle : k.isolated_cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
    }
  }
  return out;
}

std::vector<Bush> bushes(const Multigraph& g) { return bushes(g, two_core(g)); }

std::vector<Bush> bushes(const Multigraph& g, const CoreResult& core) {
  const std::size_t n = g.num_vertices();
  UnionFind uf(n);
  std::vector<bool> touched(n, false);
  for (const Edge& e : g.edges()) {
    if (core.in_core[e.u] && core.in_core[e.v]) continue;
    uf.unite(e.u, e.v);
    touched[e.u] = touched[e.v] = true;
  }
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> slot(n, kNone);
  std::vector<Bush> out;
  for (Vertex v = 0; v < n; ++v) {
    // Core vertices without a pendant edge belong to no bush.
    if (core.in_core[v] && !touched[v]) continue;
    const auto r = uf.find(v);
    if (slot[r] == kNone) {
      slot[r] = static_cast<std::uint32_t>(out.size());
      out.emplace_back();
    }
    Bush& bush = out[slot[r]];
    bush.vertices.push_back(v);
    if (core.in_core[v]) bush.root = v;
  }
  return out;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::tree: return "tree";
    case ComponentKind::cycle: return "cycle";
    case ComponentKind::other: return "other";
  }
  return "?";
}

ComponentReport classify_components(const Multigraph& g, std::size_t size_bound) {
  if (size_bound == 0) throw DomainError("size bound must be at least 1");
  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  ComponentReport out;
  out.size_bound = size_bound;
  out.components.resize(count);
  std::vector<bool> all_degree_two(count, true);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.components[label[v]].vertices.push_back(v);
    if (g.degree(v) != 2) all_degree_two[label[v]] = false;
  }
  for (const Edge& e : g.edges()) ++out.components[label[e.u]].edges;

  std::size_t best = 0;
  for (std::size_t c = 0; c < count; ++c) {
    Component& comp = out.components[c];
    const std::size_t size = comp.vertices.size();
    if (comp.edges + 1 == size) comp.kind = ComponentKind::tree;
    else if (comp.edges == size && all_degree_two[c]) comp.kind = ComponentKind::cycle;
    else comp.kind = ComponentKind::other;
    if (size > out.components[best].vertices.size()) best = c;
  }
  if (count > 0) out.giant = best;
  for (std::size_t c = 0; c < count; ++c) {
    if (out.giant && c == *out.giant) continue;
    const Component& comp = out.components[c];
    if (comp.vertices.size() != 1) out.others_are_isolated_vertices = false;
    switch (comp.kind) {
      case ComponentKind::tree:
        ++out.isolated_trees;
        out.max_tree_size = std::max(out.max_tree_size, comp.vertices.size());
        if (comp.vertices.size() > size_bound) out.trees_within_bound = false;
        break;
      case ComponentKind::cycle: ++out.isolated_cycles; break;
      case ComponentKind::other: ++out.other_components; break;
    }
  }
  return out;
}

RunLength longest_deg2_run(const KernelResult& k) {
  RunLength out;
  for (const auto& path : k.edge_paths) out.length = std::max(out.length, path.size());
  for (const auto& cycle : k.isolated_cycles) {
    if (cycle.size() - 1 > out.length) {
      out.length = cycle.size() - 1;
      out.from_cycle = true;
    }
  }
  return out;
}

RunLength longest_deg2_run(const Multigraph& core) { return longest_deg2_run(kernel(core)); }

RunCount count_deg2_paths(const KernelResult& kr, std::size_t k) {
  if (k == 0) throw DomainError("run length threshold must be at least 1");
  RunCount out;
  for (const auto& path : kr.edge_paths) {
    if (path.size() >= k) ++out.count;
  }
  for (const auto& cycle : kr.isolated_cycles) {
    if (cycle.size() - 1 >= k) {
      ++out.count;
      ++out.cycles;
    }
  }
  return out;
}

RunCount count_deg2_paths(const Multigraph& core, std::size_t k) {
  if (k == 0) throw DomainError("run length threshold must be at least 1");
  return count_deg2_paths(kernel(core), k);
}

std::vector<Bush> Decomposition::isolated_trees() const {
  std::vector<Bush> out;
  for (const Bush& b : bushes) {
    if (!b.root) out.push_back(b);
  }
  return out;
}

std::size_t Decomposition::max_bush_size() const {
  std::size_t best = 0;
  for (const Bush& b : bushes) best = std::max(best, b.vertices.size());
  return best;
}

Decomposition decompose(const Multigraph& g, std::size_t size_bound) {
  Decomposition out;
  out.core = two_core(g);
  out.kernel = kernel(out.core.core);
  out.bushes = bushes(g, out.core);
  out.components = classify_components(g, size_bound);
  out.longest_run = longest_deg2_run(out.kernel);
  const Multigraph& c = out.core.core;
  out.core_census.assign(c.max_degree() + 1, 0);
  for (Vertex v = 0; v < c.num_vertices(); ++v) ++out.core_census[c.degree(v)];
  return out;
}

}  // namespace perclab
