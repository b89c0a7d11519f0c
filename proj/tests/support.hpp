#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ctqw/families.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/jacobi.hpp"

namespace ctqw::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2024u;

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Finite Jacobi data with ω ∈ [omega_lo, 4], α ∈ [−alpha_max, alpha_max].
  JacobiSeq jacobi(std::size_t levels, double omega_lo = 0.2, double alpha_max = 2.0) {
    std::vector<double> omega(levels - 1), alpha(levels);
    for (auto& w : omega) w = uniform(omega_lo, 4.0);
    for (auto& a : alpha) a = uniform(-alpha_max, alpha_max);
    return JacobiSeq::finite(std::move(omega), std::move(alpha));
  }

  /// Connected graph: a random spanning tree plus extra edges.
  Graph connected_graph(std::size_t n, double extra_density) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(integer(0, static_cast<long>(v) - 1)), v);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(extra_density)) edges.emplace_back(a, b);
    return build_graph(n, edges, static_cast<Vertex>(integer(0, static_cast<long>(n) - 1)));
  }

  /// A finite family with an explicit graph, sizes small enough for the oracle.
  FamilySpec finite_family() {
    switch (integer(0, 4)) {
      case 0: return parse_family("complete:n=" + std::to_string(integer(2, 10)));
      case 1: return parse_family("cycle:n=" + std::to_string(integer(3, 12)));
      case 2: return parse_family("path:n=" + std::to_string(integer(2, 12)));
      case 3: return parse_family("glued-trees:n=" + std::to_string(integer(1, 3)));
      default: return parse_family("hypercube:n=" + std::to_string(integer(1, 6)));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace ctqw::testing
