#pragma once

// Vertex and edge expansion of multigraphs.
//
//   beta  = min over non-empty S, |S| <= n/2, of |N(S) \ S| / |S|
//   gamma = min over S with 0 < d(S) <= |E|, of e(S) / d(S)
//
// N(S) ignores loops and counts a neighbour once however many parallel edges
// lead to it. e(S) counts edges leaving S with multiplicity; d(S) is the
// degree sum with loops counted twice.
//
// Exact values come from exhaustive search and are limited to small graphs.
// For larger graphs the certificate brackets beta between a spectral lower
// bound and the ratio of explicit sets.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perclab/multigraph.hpp"
#include "perclab/rng.hpp"

namespace perclab {

// Non-negative rational num/den with den > 0.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=>
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }
};

inline constexpr std::size_t kExhaustiveLimit = 20;

struct ExactExpansion {
  Ratio ratio;
  std::vector<Vertex> witness;  // lexicographically least minimiser, ascending
};

// Throws DomainError when n exceeds limit (use the bounds instead) or n < 2.
// limit may not exceed 30.
ExactExpansion exact_vertex_expansion(const Multigraph& g, std::size_t limit = kExhaustiveLimit);

// Throws DomainError when n exceeds limit. Ratio 0 with an empty witness when
// no set has positive degree sum.
ExactExpansion exact_edge_expansion(const Multigraph& g, std::size_t limit = kExhaustiveLimit);

// |N(S) \ S| for an explicit set.
std::size_t outside_neighbours(const Multigraph& g, std::span<const Vertex> set);

// 2/(k-1) for a run of k >= 2 internal degree-2 vertices, if the k-1 run
// vertices that realise it fit in a set of size <= n/2; none otherwise.
std::optional<double> path_upper_bound(std::size_t run, std::size_t n);

struct SpectralOptions {
  double tolerance = 1e-8;        // on the Ritz residual norm
  std::size_t max_iterations = 10'000;
  std::size_t krylov_dim = 100;   // basis size before an explicit restart
  Seed seed = 0;                  // start vector
};

struct SpectralBound {
  double lambda2 = 0;       // second smallest eigenvalue of the normalized Laplacian
  double lower_bound = 0;   // (lambda2 / 2) * (d_min / d_max)
  bool connected = false;   // false: lambda2 and the bound are reported as 0
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0;
};

// Lanczos with full reorthogonalisation on the complement of the trivial
// eigenvector D^(1/2) 1.
SpectralBound spectral_lower_bound(const Multigraph& g, const SpectralOptions& options = {});

// Exact diameter by breadth-first search from every vertex; none when g is
// disconnected.
std::optional<std::size_t> diameter(const Multigraph& g);

struct DiameterCheck {
  std::optional<std::size_t> diameter;  // none: disconnected
  double bound = 0;                     // 2 log_{1+beta}(n/2) + 2
  double strict_bound = 0;              // log_{1+beta}(n/2), reported only
  bool pass = false;
  bool strict_pass = false;
};

// Throws DomainError unless beta > 0.
DiameterCheck diameter_check(const Multigraph& g, double beta);

struct ReinstatementCheck {
  bool precondition_ok = true;
  std::string violation;                        // empty when the precondition holds
  std::optional<std::pair<Vertex, Vertex>> too_close;
  Ratio beta_before;                            // exact beta of g'
  Ratio beta_after;                             // exact beta of g-hat
  bool expansion_ok = false;                    // beta_after >= min(beta_before, 2) / 2
  bool chain_ok = false;                        // counting inequality on every nontrivial set
  std::size_t nontrivial_sets = 0;              // sets with |S - W| < |S n W|
  bool pass = false;
};

// g' is g-hat minus the reinstated set W, with the remaining vertices
// relabelled in increasing order; W holds g-hat labels. The precondition is
// that the vertices of W have no neighbour in W and are pairwise at distance
// >= 3 in g-hat. Throws DomainError when g' is not g-hat - W.
ReinstatementCheck reinstatement_expansion_check(const Multigraph& gprime,
                                                 std::span<const Vertex> reinstated,
                                                 const Multigraph& ghat,
                                                 std::size_t limit = kExhaustiveLimit);

struct Bound {
  double value = 0;
  std::string source;
};

struct ExpansionCertificate {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::optional<ExactExpansion> exact_beta;
  std::optional<ExactExpansion> exact_gamma;
  std::optional<Bound> lower_bound;
  std::optional<Bound> upper_bound;
  std::optional<double> lambda2;
  std::optional<DiameterCheck> diameter;
};

struct CertifyOptions {
  bool exact = true;    // exhaustive beta and gamma when n <= limit
  bool bounds = true;   // spectral lower bound and explicit-set upper bounds
  bool diameter = true; // diameter check when beta is known to be positive and n <= limit
  std::size_t limit = kExhaustiveLimit;
  SpectralOptions spectral;
};

ExpansionCertificate certify(const Multigraph& g, const CertifyOptions& options = {});

}  // namespace perclab
