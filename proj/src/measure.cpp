#include "ctqw/measure.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "ctqw/error.hpp"

namespace ctqw {

double DiscreteMeasure::mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

bool ContinuousMeasure::bounded() const noexcept {
  return std::isfinite(lo) && std::isfinite(hi);
}

double ContinuousMeasure::density_mass() const {
  return integrate(ContinuousMeasure{density, lo, hi, singular_endpoints, {}, edge, edge_coeff},
                   [](double) { return 1.0; });
}

double total_mass(const SpectralMeasure& m) {
  return std::visit([](const auto& mu) { return mu.mass(); }, m);
}

double integrate(const ContinuousMeasure& m, const std::function<double(double)>& f) {
  double err = 0.0;
  double value = 0.0;
  double l1 = 0.0;
  if (m.bounded()) {
    // x = mid + half·cos θ removes inverse-square-root endpoint singularities
    const double mid = 0.5 * (m.lo + m.hi);
    const double half = 0.5 * (m.hi - m.lo);
    auto g = [&](double theta) {
      const double x = mid + half * std::cos(theta);
      return f(x) * m.density(x) * half * std::sin(theta);
    };
    value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        g, 0.0, std::numbers::pi, 18, 1e-12, &err, &l1);
  } else if (std::isfinite(m.lo)) {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto g = [&](double y) { return f(m.lo + y) * m.density(m.lo + y); };
    value = integrator.integrate(g, 1e-14, &err, &l1);
  } else if (std::isfinite(m.hi)) {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto g = [&](double y) { return f(m.hi - y) * m.density(m.hi - y); };
    value = integrator.integrate(g, 1e-14, &err, &l1);
  } else {
    boost::math::quadrature::sinh_sinh<double> integrator;
    auto g = [&](double x) { return f(x) * m.density(x); };
    value = integrator.integrate(g, 1e-14, &err, &l1);
  }
  if (!std::isfinite(value) || err > 1e-9 * std::max(1.0, l1))
  {
    char msg[96];
    std::snprintf(msg, sizeof msg, "adaptive quadrature error estimate %.3e exceeds tolerance (L1 %.3e)", err, l1);
    fail(ErrorCode::QuadratureNotConverged, msg);
  }
  for (std::size_t i = 0; i < m.atoms.size(); ++i) value += m.atoms.weights[i] * f(m.atoms.nodes[i]);
  return value;
}

}  // namespace ctqw
