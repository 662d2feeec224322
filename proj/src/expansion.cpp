#include "perclab/expansion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

#include "perclab/decomposition.hpp"
#include "perclab/errors.hpp"

namespace perclab {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaskBits = 30;

void check_limit(const Multigraph& g, std::size_t limit) {
  if (limit > kMaskBits) throw DomainError("exhaustive limit above 30 is not supported");
  if (g.num_vertices() > limit) {
    throw DomainError("graph has " + std::to_string(g.num_vertices()) +
                      " vertices, above the exhaustive limit of " + std::to_string(limit) +
                      "; use the spectral and explicit-set bounds instead");
  }
}

// Lexicographic order of the sorted element lists of two distinct sets.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  const Mask lowest = diff & (~diff + 1);
  const Mask above = ~((lowest << 1) - 1);
  if (a & lowest) return (b & above) != 0;  // a has e, b continues with a larger element
  return (a & above) == 0;                  // b has e; a < b only if a stops here
}

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> neighbour_masks(const Multigraph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Keeps the smallest ratio, ties to the lexicographically least set.
struct Best {
  Ratio ratio{1, 0};
  Mask set = 0;
  bool any = false;

  void offer(Ratio r, Mask s) {
    if (!any) {
      ratio = r;
      set = s;
      any = true;
      return;
    }
    const auto cmp = r <=> ratio;
    if (cmp < 0 || (cmp == 0 && lex_less(s, set))) {
      ratio = r;
      set = s;
    }
  }
};

std::vector<std::size_t> bfs_distances(const Multigraph& g, Vertex source, std::size_t cap) {
  constexpr std::size_t kInf = ~std::size_t{0};
  std::vector<std::size_t> dist(g.num_vertices(), kInf);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (dist[v] >= cap) continue;
    for (const Incidence& inc : g.incidences(v)) {
      if (dist[inc.to] == kInf) {
        dist[inc.to] = dist[v] + 1;
        queue.push(inc.to);
      }
    }
  }
  return dist;
}

}  // namespace

ExactExpansion exact_vertex_expansion(const Multigraph& g, std::size_t limit) {
  check_limit(g, limit);
  const std::size_t n = g.num_vertices();
  if (n < 2) throw DomainError("vertex expansion needs at least 2 vertices");
  const auto adj = neighbour_masks(g);
  const std::size_t max_size = n / 2;
  // neighbourhood[S] = union of adj over S, built from S minus its lowest element.
  std::vector<Mask> neighbourhood(std::size_t{1} << n, 0);
  Best best;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    neighbourhood[s] = neighbourhood[s & (s - 1)] | adj[low];
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size > max_size) continue;
    const auto outside = static_cast<std::uint64_t>(std::popcount(neighbourhood[s] & ~s));
    best.offer({outside, size}, s);
  }
  return {best.ratio, mask_to_vertices(best.set)};
}

ExactExpansion exact_edge_expansion(const Multigraph& g, std::size_t limit) {
  check_limit(g, limit);
  const std::size_t n = g.num_vertices();
  const std::size_t num_edges = g.num_edges();
  // multiplicity[u][v] for u != v, and non-loop degree.
  std::vector<std::vector<std::uint32_t>> mult(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::uint32_t> plain_degree(n, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
    ++plain_degree[e.u];
    ++plain_degree[e.v];
  }
  std::vector<std::uint32_t> degree_sum(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> leaving(std::size_t{1} << n, 0);
  Best best;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const auto v = static_cast<Vertex>(std::countr_zero(s));
    const Mask rest = s & (s - 1);
    std::uint32_t into_rest = 0;
    for (Mask r = rest; r; r &= r - 1) into_rest += mult[v][std::countr_zero(r)];
    degree_sum[s] = degree_sum[rest] + static_cast<std::uint32_t>(g.degree(v));
    leaving[s] = leaving[rest] + plain_degree[v] - 2 * into_rest;
    if (degree_sum[s] == 0 || degree_sum[s] > num_edges) continue;
    best.offer({leaving[s], degree_sum[s]}, s);
  }
  if (!best.any) return {{0, 1}, {}};
  return {best.ratio, mask_to_vertices(best.set)};
}

std::size_t outside_neighbours(const Multigraph& g, std::span<const Vertex> set) {
  std::vector<bool> in_set(g.num_vertices(), false);
  for (Vertex v : set) in_set[v] = true;
  std::vector<bool> counted(g.num_vertices(), false);
  std::size_t out = 0;
  for (Vertex v : set) {
    for (const Incidence& inc : g.incidences(v)) {
      if (!in_set[inc.to] && !counted[inc.to]) {
        counted[inc.to] = true;
        ++out;
      }
    }
  }
  return out;
}

std::optional<double> path_upper_bound(std::size_t run, std::size_t n) {
  if (run < 2 || run - 1 > n / 2) return std::nullopt;
  return 2.0 / static_cast<double>(run - 1);
}

SpectralBound spectral_lower_bound(const Multigraph& g, const SpectralOptions& options) {
  SpectralBound out;
  const std::size_t n = g.num_vertices();
  out.connected = n >= 1 && is_connected(g) && (n == 1 || g.min_degree() > 0);
  if (!out.connected || n < 2) {
    out.converged = out.connected;
    return out;
  }

  Eigen::VectorXd inv_sqrt_deg(n), trivial(n);
  for (Vertex v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    inv_sqrt_deg[v] = 1.0 / std::sqrt(d);
    trivial[v] = std::sqrt(d);
  }
  trivial.normalize();

  // y = x - D^-1/2 A D^-1/2 x; a loop contributes 2 to A_vv.
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const Eigen::VectorXd scaled = x.cwiseProduct(inv_sqrt_deg);
    for (Vertex v = 0; v < n; ++v) {
      double sum = 0;
      for (const Incidence& inc : g.incidences(v)) sum += scaled[inc.to];
      y[v] = x[v] - inv_sqrt_deg[v] * sum;
    }
  };

  const std::size_t space = n - 1;  // dimension of the complement of `trivial`
  const std::size_t max_basis = std::max<std::size_t>(2, std::min(options.krylov_dim, space));
  Rng rng = make_rng(options.seed);
  Eigen::VectorXd start(n);
  for (Vertex v = 0; v < n; ++v) start[v] = uniform01(rng) - 0.5;

  Eigen::MatrixXd basis(n, max_basis);
  Eigen::VectorXd w(n);
  double theta = 0;
  while (true) {
    start -= trivial.dot(start) * trivial;
    start.normalize();
    std::vector<double> alpha, beta;
    basis.col(0) = start;
    std::size_t j = 0;
    Eigen::VectorXd ritz_coeffs;
    bool restart = false;
    while (true) {
      apply(basis.col(j), w);
      ++out.iterations;
      alpha.push_back(basis.col(j).dot(w));
      // Two passes of classical Gram-Schmidt against the basis and `trivial`.
      for (int pass = 0; pass < 2; ++pass) {
        w -= trivial.dot(w) * trivial;
        const auto q = basis.leftCols(j + 1);
        w -= q * (q.transpose() * w);
      }
      const double b = w.norm();

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), alpha.size());
      Eigen::VectorXd sub = beta.empty() ? Eigen::VectorXd()
                                         : Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), beta.size()));
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      theta = tri.eigenvalues()[0];
      ritz_coeffs = tri.eigenvectors().col(0);
      out.residual = b * std::abs(ritz_coeffs[j]);

      const bool invariant = b < 1e-12 || j + 1 >= space;
      if (out.residual <= options.tolerance || invariant) {
        out.converged = true;
        break;
      }
      if (out.iterations >= options.max_iterations) break;
      if (j + 1 >= max_basis) {
        restart = true;
        break;
      }
      beta.push_back(b);
      basis.col(j + 1) = w / b;
      ++j;
    }
    if (!restart) break;
    start = basis.leftCols(j + 1) * ritz_coeffs;
  }

  out.lambda2 = std::max(0.0, theta);
  const double ratio = static_cast<double>(g.min_degree()) / static_cast<double>(g.max_degree());
  out.lower_bound = out.lambda2 / 2.0 * ratio;
  return out;
}

std::optional<std::size_t> diameter(const Multigraph& g) {
  constexpr std::size_t kInf = ~std::size_t{0};
  std::size_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (std::size_t d : bfs_distances(g, s, kInf)) {
      if (d == kInf) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

DiameterCheck diameter_check(const Multigraph& g, double beta) {
  if (!(beta > 0)) throw DomainError("diameter bound needs beta > 0");
  DiameterCheck out;
  out.diameter = diameter(g);
  const double half = static_cast<double>(g.num_vertices()) / 2.0;
  const double log_half = half > 1 ? std::log(half) / std::log1p(beta) : 0.0;
  out.strict_bound = log_half;
  out.bound = 2.0 * log_half + 2.0;
  if (out.diameter) {
    const auto d = static_cast<double>(*out.diameter);
    out.pass = d <= out.bound;
    out.strict_pass = d <= out.strict_bound;
  }
  return out;
}

ReinstatementCheck reinstatement_expansion_check(const Multigraph& gprime,
                                                 std::span<const Vertex> reinstated,
                                                 const Multigraph& ghat, std::size_t limit) {
  const std::size_t n = ghat.num_vertices();
  std::vector<bool> in_w(n, false);
  for (Vertex w : reinstated) {
    if (w >= n) throw DomainError("reinstated vertex out of range");
    in_w[w] = true;
  }
  std::vector<bool> keep(n);
  for (Vertex v = 0; v < n; ++v) keep[v] = !in_w[v];
  const auto remainder = induced_subgraph(ghat, keep);
  if (remainder.graph.num_vertices() != gprime.num_vertices() ||
      canonical_edges(remainder.graph) != canonical_edges(gprime)) {
    throw DomainError("g' is not g-hat with the reinstated vertices removed");
  }

  ReinstatementCheck out;
  std::vector<Vertex> w_list;
  for (Vertex v = 0; v < n; ++v) {
    if (in_w[v]) w_list.push_back(v);
  }
  for (Vertex w : w_list) {
    const auto dist = bfs_distances(ghat, w, 2);
    for (Vertex x : w_list) {
      if (x != w && dist[x] <= 2) {
        out.precondition_ok = false;
        out.too_close = std::pair{std::min(w, x), std::max(w, x)};
        out.violation = "reinstated vertices " + std::to_string(out.too_close->first + 1) +
                        " and " + std::to_string(out.too_close->second + 1) +
                        " are at distance " + std::to_string(dist[x]) + " < 3";
        return out;
      }
    }
  }

  out.beta_before = exact_vertex_expansion(gprime, limit).ratio;
  out.beta_after = exact_vertex_expansion(ghat, limit).ratio;
  const Ratio target = out.beta_before <= Ratio{2, 1}
                           ? Ratio{out.beta_before.num, 2 * out.beta_before.den}
                           : Ratio{1, 1};
  out.expansion_ok = out.beta_after >= target;

  // For |S - W| < |S n W| every reinstated vertex of S brings its own
  // neighbours, at most |S - W| of which lie in S.
  const auto adj = neighbour_masks(ghat);
  Mask w_mask = 0;
  std::uint64_t d_w = ~std::uint64_t{0};
  for (Vertex w : w_list) {
    w_mask |= Mask{1} << w;
    d_w = std::min<std::uint64_t>(d_w, std::popcount(adj[w]));
  }
  out.chain_ok = true;
  if (!w_list.empty()) {
    std::vector<Mask> neighbourhood(std::size_t{1} << n, 0);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      neighbourhood[s] = neighbourhood[s & (s - 1)] | adj[std::countr_zero(s)];
      const auto size = static_cast<std::uint64_t>(std::popcount(s));
      if (size > n / 2) continue;
      const auto in_w_count = static_cast<std::uint64_t>(std::popcount(s & w_mask));
      const std::uint64_t rest = size - in_w_count;
      if (rest >= in_w_count) continue;
      ++out.nontrivial_sets;
      const auto outside = static_cast<std::uint64_t>(std::popcount(neighbourhood[s] & ~s));
      if (outside + rest < d_w * in_w_count || d_w * in_w_count < rest + (d_w - 1) * in_w_count) {
        out.chain_ok = false;
      }
    }
  }
  out.pass = out.expansion_ok && out.chain_ok;
  return out;
}

namespace {

// Explicit sets whose ratio bounds beta from above: the smaller side of a
// disconnected graph, and the longest degree-2 run of the 2-core together
// with the bushes hanging from it.
std::optional<Bound> explicit_upper_bound(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::optional<Bound> best;
  auto offer = [&](std::span<const Vertex> set, const char* source) {
    if (set.empty() || set.size() > n / 2) return;
    const double ratio = static_cast<double>(outside_neighbours(g, set)) / set.size();
    if (!best || ratio < best->value) best = Bound{ratio, source};
  };

  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  if (count > 1) {
    std::vector<std::vector<Vertex>> members(count);
    for (Vertex v = 0; v < n; ++v) members[label[v]].push_back(v);
    const auto smallest = std::min_element(members.begin(), members.end(),
                                           [](const auto& a, const auto& b) { return a.size() < b.size(); });
    offer(*smallest, "component");
    return best;
  }

  const auto core = two_core(g);
  if (core.core.num_vertices() == 0) return best;
  const auto k = kernel(core.core);
  std::vector<Vertex> run;
  for (const auto& path : k.edge_paths) {
    if (path.size() > run.size() + 1 && path.size() >= 2) run.assign(path.begin(), path.end() - 1);
  }
  for (const auto& cycle : k.isolated_cycles) {
    if (cycle.size() >= 3 && cycle.size() - 2 > run.size()) run.assign(cycle.begin(), cycle.end() - 2);
  }
  if (run.empty()) return best;
  std::vector<bool> in_run(n, false);
  std::vector<Vertex> set;
  for (Vertex c : run) {
    in_run[core.to_parent[c]] = true;
    set.push_back(core.to_parent[c]);
  }
  for (const Bush& bush : bushes(g, core)) {
    if (bush.root && in_run[*bush.root]) {
      for (Vertex v : bush.vertices) {
        if (v != *bush.root) set.push_back(v);
      }
    }
  }
  offer(set, "degree-2 run");
  return best;
}

}  // namespace

ExpansionCertificate certify(const Multigraph& g, const CertifyOptions& options) {
  ExpansionCertificate out;
  out.n = g.num_vertices();
  out.max_degree = g.max_degree();
  const bool small = out.n >= 2 && out.n <= options.limit;
  if (options.exact && small) {
    out.exact_beta = exact_vertex_expansion(g, options.limit);
    out.exact_gamma = exact_edge_expansion(g, options.limit);
  }
  if (options.bounds && out.n >= 2) {
    const auto spectral = spectral_lower_bound(g, options.spectral);
    out.lambda2 = spectral.lambda2;
    if (spectral.converged) out.lower_bound = Bound{spectral.lower_bound, "spectral"};
    out.upper_bound = explicit_upper_bound(g);
  }
  if (options.diameter && small) {
    double beta = 0;
    if (out.exact_beta) beta = out.exact_beta->ratio.value();
    else if (out.lower_bound) beta = out.lower_bound->value;
    if (beta > 0) out.diameter = diameter_check(g, beta);
  }
  return out;
}

}  // namespace perclab
