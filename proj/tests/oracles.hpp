#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library code they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "perclab/multigraph.hpp"
#include "perclab/rng.hpp"

namespace oracle {

using perclab::Edge;
using perclab::Multigraph;
using perclab::Vertex;

// Every perfect matching of points 0..k-1 as a partner vector, by pairing the
// lowest unmatched point with each candidate in turn.
inline void matchings_rec(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  const auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    out.push_back(partner);
    return;
  }
  const int a = static_cast<int>(it - partner.begin());
  for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
    if (partner[b] != -1) continue;
    partner[a] = b;
    partner[b] = a;
    matchings_rec(partner, out);
    partner[a] = partner[b] = -1;
  }
}

inline std::vector<std::vector<int>> all_matchings(int points) {
  std::vector<int> partner(points, -1);
  std::vector<std::vector<int>> out;
  matchings_rec(partner, out);
  return out;
}

inline std::vector<std::set<Vertex>> adjacency(const Multigraph& g) {
  std::vector<std::set<Vertex>> adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  return adj;
}

// Largest vertex set inducing minimum degree >= 2, loops counting twice.
inline std::vector<bool> two_core_members(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> best(n, false);
  std::size_t best_size = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges()) {
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
        ++deg[e.u];
        ++deg[e.v];
      }
    }
    bool ok = true;
    std::size_t size = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      ++size;
      if (deg[v] < 2) ok = false;
    }
    if (ok && size > best_size) {
      best_size = size;
      for (Vertex v = 0; v < n; ++v) best[v] = mask >> v & 1;
    }
  }
  return best;
}

struct Expansion {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  std::vector<Vertex> witness;
  double value() const { return double(num) / double(den); }
};

inline bool less_ratio(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return a * d < c * b;
}

// min |N(S) \ S| / |S| over 1 <= |S| <= n/2; ties broken by the
// lexicographically smallest sorted vertex list.
inline Expansion vertex_expansion(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  const auto adj = adjacency(g);
  Expansion best{std::numeric_limits<std::uint64_t>::max(), 1, {}};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    if (s.size() > n / 2) continue;
    std::set<Vertex> out;
    for (Vertex v : s) {
      for (Vertex w : adj[v]) {
        if (!(mask >> w & 1)) out.insert(w);
      }
    }
    const std::uint64_t num = out.size();
    const std::uint64_t den = s.size();
    if (best.witness.empty() || less_ratio(num, den, best.num, best.den) ||
        (!less_ratio(best.num, best.den, num, den) && s < best.witness)) {
      best = {num, den, s};
    }
  }
  return best;
}

// min e(S) / d(S) over 0 < d(S) <= |E|.
inline Expansion edge_expansion(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  Expansion best{0, 1, {}};
  bool found = false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t dsum = 0, leaving = 0;
    for (const Edge& e : g.edges()) {
      const bool a = mask >> e.u & 1, b = mask >> e.v & 1;
      dsum += a + b;
      leaving += a != b;
    }
    if (dsum == 0 || dsum > g.num_edges()) continue;
    if (!found || less_ratio(leaving, dsum, best.num, best.den)) {
      best = {leaving, dsum, {}};
      found = true;
    }
  }
  return best;
}

// All-pairs distances by Floyd-Warshall; -1 when disconnected.
inline long diameter(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr long inf = 1'000'000;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    if (e.u != e.v) d[e.u][e.v] = d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  long best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, d[i][j]);
  return best >= inf ? -1 : best;
}

// Uniform labelled tree on n >= 2 vertices from a random Pruefer sequence.
inline Multigraph random_tree(std::size_t n, perclab::Rng& rng) {
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(perclab::uniform_below(rng, n));
  std::vector<int> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, c});
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.push_back({last[0], last[1]});
  return Multigraph(n, std::move(edges));
}

inline Multigraph random_graph(std::size_t n, double p, perclab::Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (perclab::bernoulli(rng, p)) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

inline Multigraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Multigraph(n, std::move(edges));
}

inline Multigraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Multigraph(n, std::move(edges));
}

inline Multigraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

}  // namespace oracle
