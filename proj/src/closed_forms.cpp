#include <cmath>
#include <numbers>
#include <string>

#include "ctqw/amplitudes.hpp"
#include "ctqw/error.hpp"
#include "ctqw/parallel.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

[[noreturn]] void no_closed_form(const FamilySpec& spec, std::size_t k) {
  fail(ErrorCode::NoClosedForm, std::string(family_name(spec.kind)) +
                                    " has no closed-form amplitude for k=" + std::to_string(k));
}

// (−i)^k
cd minus_i_pow(std::size_t k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

double bessel_j(std::size_t k, double x) {
  const double v = std::cyl_bessel_j(static_cast<double>(k), std::abs(x));
  return (x < 0.0 && k % 2 == 1) ? -v : v;
}

// Arcsine measure of radius 2c: q_0 = J_0(2cτ), q_k = √2(−i)^k J_k(2cτ).
cd arcsine_amplitude(double c, std::size_t k, double tau) {
  if (k == 0) return bessel_j(0, 2.0 * c * tau);
  return std::sqrt(2.0) * minus_i_pow(k) * bessel_j(k, 2.0 * c * tau);
}

// Semicircle of radius R: q_k = (−i)^k (J_k(Rτ) + J_{k+2}(Rτ)).
cd semicircle_amplitude(double radius, std::size_t k, double tau) {
  const double x = radius * tau;
  return minus_i_pow(k) * (bessel_j(k, x) + bessel_j(k + 2, x));
}

// N levels with constant off-diagonal c.
cd chebyshev2_amplitude(std::size_t levels, double c, std::size_t k, double tau) {
  if (k >= levels) return 0.0;
  const double n1 = static_cast<double>(levels + 1);
  cd sum = 0.0;
  for (std::size_t l = 1; l <= levels; ++l) {
    const double theta = static_cast<double>(l) * pi / n1;
    sum += std::sin(theta) * std::sin(static_cast<double>(k + 1) * theta) *
           std::polar(1.0, -2.0 * c * tau * std::cos(theta));
  }
  return 2.0 / n1 * sum;
}

cd hermite_amplitude(std::size_t k, double tau) {
  if (tau == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  const double log_mod = kd * std::log(std::abs(tau)) - 0.5 * tau * tau - 0.5 * std::lgamma(kd + 1.0);
  const double sign = (tau < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
  return sign * minus_i_pow(k) * std::exp(log_mod);
}

cd laguerre_amplitude(double a, double g, std::size_t k, double tau) {
  if (tau == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  const double b = -a * (1.0 + g);
  const double at = a * tau;
  const double log_binom = std::lgamma(g + kd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(g + 1.0);
  const double log_mod = 0.5 * log_binom + kd * std::log(std::abs(at)) -
                         0.5 * (kd + g + 1.0) * std::log1p(at * at);
  double phase = -b * tau - (kd + g + 1.0) * std::atan(at);
  cd z = std::polar(std::exp(log_mod), phase) * minus_i_pow(k);
  if (at < 0.0 && k % 2 == 1) z = -z;
  return z;
}

// Two-level factor ω_1 = a, α = (0, b): returns (⟨0|e^{−iτM}|0⟩, ⟨1|e^{−iτM}|0⟩).
std::pair<cd, cd> class_a_factor(double a, double b, double tau) {
  const double root = std::sqrt(b * b + 4.0 * a);
  cd f0 = 0.0, f1 = 0.0;
  for (double lambda : {0.5 * (b - root), 0.5 * (b + root)}) {
    const double w = a / (a + lambda * lambda);
    const cd e = std::polar(1.0, -tau * lambda);
    f0 += w * e;
    f1 += w * lambda / std::sqrt(a) * e;
  }
  return {f0, f1};
}

// std::pow on complex goes through log and gives NaN for 0^0
cd ipow(cd z, long e) {
  cd r = 1.0;
  for (; e > 0; e >>= 1, z *= z)
    if (e & 1) r *= z;
  return r;
}

cd class_a_amplitude(double a, double b, long n, std::size_t k, double tau) {
  if (k > static_cast<std::size_t>(n)) return 0.0;
  const auto [f0, f1] = class_a_factor(a, b, tau);
  const double nd = static_cast<double>(n), kd = static_cast<double>(k);
  const double binom = std::exp(std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0));
  return std::sqrt(binom) * ipow(f0, n - static_cast<long>(k)) * ipow(f1, static_cast<long>(k));
}

cd vector_graph_q0(double tau) {
  const double s5 = std::sqrt(5.0);
  return 0.2 * std::polar(1.0, -tau) *
         cd{2.0 + 3.0 * std::cos(s5 * tau), s5 * std::sin(s5 * tau)};
}

cd atoms_amplitude(const DiscreteMeasure& mu, const JacobiSeq& j, std::size_t k, double tau) {
  cd sum = 0.0;
  for (std::size_t l = 0; l < mu.size(); ++l)
    sum += mu.weights[l] * std::polar(1.0, -tau * mu.nodes[l]) *
           orthonormal_polys(j, k, mu.nodes[l])[k];
  return sum;
}

}  // namespace

cd amplitude_closed_form(const FamilySpec& spec, std::size_t k, double t) {
  using K = FamilyKind;
  const double tau = spec.scale.value_or(default_scale(spec)) * t;
  switch (spec.kind) {
    case K::CompleteK: {
      const long n = spec.iparam("n");
      if (n < 1) break;
      if (n == 1) return k == 0 ? 1.0 : 0.0;
      const double nd = static_cast<double>(n);
      const cd big = std::polar(1.0, -(nd - 1.0) * tau);
      const cd small = std::polar(1.0, tau);
      if (k == 0) return (big + (nd - 1.0) * small) / nd;
      if (k == 1) return std::sqrt(nd - 1.0) / nd * (big - small);
      return 0.0;
    }
    case K::CycleC: {
      const long n = spec.iparam("n");
      if (n < 3) break;
      if (k > static_cast<std::size_t>(n / 2)) return 0.0;
      const double nd = static_cast<double>(n);
      cd psi = 0.0;
      for (long l = 0; l < n; ++l) {
        const double theta = 2.0 * pi * static_cast<double>(l) / nd;
        psi += std::cos(theta * static_cast<double>(k)) * std::polar(1.0, -2.0 * tau * std::cos(theta));
      }
      psi /= nd;
      const bool antipode = n % 2 == 0 && k == static_cast<std::size_t>(n / 2);
      return (k == 0 || antipode) ? psi : std::sqrt(2.0) * psi;
    }
    case K::PathP: {
      const long n = spec.iparam("n");
      if (n < 1) break;
      return chebyshev2_amplitude(static_cast<std::size_t>(n), 1.0, k, tau);
    }
    case K::GluedTreesG: {
      const long n = spec.iparam("n");
      if (n < 1) break;
      return chebyshev2_amplitude(static_cast<std::size_t>(2 * n + 1), std::sqrt(2.0), k, tau);
    }
    case K::Tchebichef1: {
      const double m = spec.param("m");
      const double c = std::pow(2.0, m - 1.0);
      if (!spec.has("n")) return arcsine_amplitude(c, k, tau);
      const long n = spec.iparam("n");
      if (n < 1) break;
      if (k >= static_cast<std::size_t>(n)) return 0.0;
      cd sum = 0.0;
      for (long l = 0; l < n; ++l) {
        const double theta = static_cast<double>(2 * l + 1) * pi / static_cast<double>(2 * n);
        sum += std::cos(static_cast<double>(k) * theta) * std::polar(1.0, -2.0 * c * tau * std::cos(theta));
      }
      return (k == 0 ? 1.0 : std::sqrt(2.0)) / static_cast<double>(n) * sum;
    }
    case K::Tchebichef2: {
      const double m = spec.param("m");
      if (!spec.has("n")) return semicircle_amplitude(std::pow(2.0, m), k, tau);
      const long n = spec.iparam("n");
      if (n < 1) break;
      return chebyshev2_amplitude(static_cast<std::size_t>(n + 1), std::pow(2.0, m - 1.0), k, tau);
    }
    case K::Line:
      return arcsine_amplitude(1.0, k, tau);
    case K::Comb2D:
      return arcsine_amplitude(std::sqrt(2.0), k, tau);
    case K::StarLattice:
      if (spec.param("N") == 2.0) return arcsine_amplitude(1.0, k, tau);
      break;
    case K::Hypercube: {
      const long n = spec.iparam("n");
      if (n < 1) break;
      return class_a_amplitude(1.0, 0.0, n, k, tau);
    }
    case K::ProductClassA: {
      const double a = spec.param("a");
      const long n = spec.iparam("n");
      if (!(a > 0.0) || n < 1) break;
      return class_a_amplitude(a, spec.param_or("b", 0.0), n, k, tau);
    }
    case K::HermiteInfinite:
      return hermite_amplitude(k, tau);
    case K::Laguerre: {
      const double a = spec.param_or("a", 1.0);
      const double g = spec.param_or("gamma", 0.0);
      if (!(a > 0.0) || !(g > -1.0)) break;
      return laguerre_amplitude(a, g, k, tau);
    }
    case K::HermiteFinite: {
      if (spec.iparam("n") != 3) break;
      const double x1 = std::sqrt(3.0 + std::sqrt(6.0));
      const double x2 = std::sqrt(3.0 - std::sqrt(6.0));
      const double s6 = std::sqrt(6.0);
      const cd mi{0.0, -1.0};
      switch (k) {
        case 0: return 0.5 * (std::cos(x1 * tau) + std::cos(x2 * tau));
        case 1: return mi / (2.0 * std::sqrt(3.0)) * (x1 * std::sin(x1 * tau) + x2 * std::sin(x2 * tau));
        case 2: return 0.5 * (std::cos(x1 * tau) - std::cos(x2 * tau));
        case 3:
          return mi / (2.0 * s6) *
                 (x1 * (s6 - 2.0) * std::sin(x1 * tau) - x2 * (s6 + 2.0) * std::sin(x2 * tau));
        default: return 0.0;
      }
    }
    case K::VectorGraph: {
      if (k == 0) return vector_graph_q0(tau);
      if (k > 2) return 0.0;
      const auto j = family_jacobi(spec);
      const auto mu = std::get<DiscreteMeasure>(closed_form_measure(spec));
      return atoms_amplitude(mu, j, k, tau);
    }
    case K::AngularMomentum: {
      const long n = spec.iparam("n");
      if (n < 1 || k != 0) break;
      return ipow(vector_graph_q0(tau), n);
    }
    case K::ProductClassB: {
      const double a = spec.param("a");
      const double b = spec.param_or("b", 0.0);
      const long n = spec.iparam("n");
      if (!(a > 0.0) || n < 1 || k != 0) break;
      const auto factor = JacobiSeq::finite({a, a}, {0.0, b, 2.0 * b});
      return ipow(atoms_amplitude(jacobi_to_quadrature(factor, 3), factor, 0, tau), n);
    }
    default:
      break;
  }
  no_closed_form(spec, k);
}

AmplitudeSeries amplitude_closed_form_series(const FamilySpec& spec, std::size_t kmax,
                                             std::span<const double> times) {
  AmplitudeSeries series({times.begin(), times.end()}, kmax, Method::ClosedForm);
  parallel_for(times.size(), [&](std::size_t ti) {
    for (std::size_t k = 0; k <= kmax; ++k) series.at(ti, k) = amplitude_closed_form(spec, k, times[ti]);
  });
  return series;
}

}  // namespace ctqw
