#pragma once

#include <functional>
#include <limits>
#include <variant>
#include <vector>

namespace ctqw {

/// Atoms x_l with weights A_l, nodes ascending.
struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double mass() const;
};

/// Endpoint behaviour of a symmetric density on [−c, c]:
/// InverseSqrt means g(x) ~ κ(c−|x|)^{−1/2}, Sqrt means g(x) ~ κ(c−|x|)^{1/2}.
enum class EdgeBehavior { None, InverseSqrt, Sqrt };

/// Absolutely continuous density on [lo, hi] (either end may be infinite),
/// optionally with extra point masses outside the support.
struct ContinuousMeasure {
  std::function<double(double)> density;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool singular_endpoints = false;
  DiscreteMeasure atoms;
  EdgeBehavior edge = EdgeBehavior::None;
  double edge_coeff = 0.0;  // κ above

  bool bounded() const noexcept;
  /// Integral of the density alone (adaptive quadrature).
  double density_mass() const;
  double mass() const { return density_mass() + atoms.mass(); }
};

using SpectralMeasure = std::variant<DiscreteMeasure, ContinuousMeasure>;

double total_mass(const SpectralMeasure& m);

/// ∫ f dμ for a real integrand (density part by adaptive quadrature plus atoms).
double integrate(const ContinuousMeasure& m, const std::function<double(double)>& f);

}  // namespace ctqw
