#include "ctqw/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ctqw/error.hpp"
#include "ctqw/parallel.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

using cd = std::complex<double>;

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Quadrature: return "quadrature";
    case Method::ODE: return "ode";
    case Method::ClosedForm: return "closed";
    case Method::Product: return "product";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

double AmplitudeSeries::total_probability(std::size_t ti) const {
  double s = 0.0;
  for (std::size_t k = 0; k <= kmax; ++k) s += std::norm(at(ti, k));
  return s;
}

double eval_poly(const JacobiSeq& j, std::size_t k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x - j.alpha(1);
  for (std::size_t n = 1; n < k; ++n) {
    const double next = (x - j.alpha(n + 1)) * cur - j.omega(n) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> orthonormal_polys(const JacobiSeq& j, std::size_t kmax, double x) {
  std::vector<double> p(kmax + 1, 0.0);
  p[0] = 1.0;
  double sqrt_prev = 0.0;  // √ω_k
  for (std::size_t k = 0; k < kmax; ++k) {
    const double w = j.omega(k + 1);
    if (!(w > 0.0)) break;
    const double s = std::sqrt(w);
    const double below = k > 0 ? p[k - 1] : 0.0;
    p[k + 1] = ((x - j.alpha(k + 1)) * p[k] - sqrt_prev * below) / s;
    sqrt_prev = s;
  }
  return p;
}

namespace {

cd continuous_amplitude(const ContinuousMeasure& mu, const JacobiSeq& j, std::size_t k, double t) {
  const double tau = j.scale() * t;
  auto pk = [&](double x) { return orthonormal_polys(j, k, x)[k]; };
  const double re = integrate(mu, [&](double x) { return std::cos(tau * x) * pk(x); });
  const double im = integrate(mu, [&](double x) { return -std::sin(tau * x) * pk(x); });
  return {re, im};
}

void discrete_row(const DiscreteMeasure& mu, const JacobiSeq& j, std::size_t kmax, double t,
                  std::span<cd> out) {
  const double tau = j.scale() * t;
  std::fill(out.begin(), out.end(), cd{0.0, 0.0});
  for (std::size_t l = 0; l < mu.size(); ++l) {
    const auto p = orthonormal_polys(j, kmax, mu.nodes[l]);
    const cd phase = mu.weights[l] * std::polar(1.0, -tau * mu.nodes[l]);
    for (std::size_t k = 0; k <= kmax; ++k) out[k] += phase * p[k];
  }
}

}  // namespace

cd amplitude_quadrature(const SpectralMeasure& mu, const JacobiSeq& j, std::size_t k, double t) {
  if (const auto* d = std::get_if<DiscreteMeasure>(&mu)) {
    std::vector<cd> row(k + 1);
    discrete_row(*d, j, k, t, row);
    return row[k];
  }
  return continuous_amplitude(std::get<ContinuousMeasure>(mu), j, k, t);
}

AmplitudeSeries amplitude_quadrature_series(const SpectralMeasure& mu, const JacobiSeq& j,
                                            std::size_t kmax, std::span<const double> times) {
  AmplitudeSeries series({times.begin(), times.end()}, kmax, Method::Quadrature);
  if (const auto* d = std::get_if<DiscreteMeasure>(&mu)) {
    parallel_for(times.size(), [&](std::size_t ti) {
      discrete_row(*d, j, kmax, times[ti],
                   std::span<cd>(series.values).subspan(ti * series.width(), series.width()));
    });
    return series;
  }
  const auto& c = std::get<ContinuousMeasure>(mu);
  const std::size_t w = series.width();
  parallel_for(times.size() * w, [&](std::size_t idx) {
    series.values[idx] = continuous_amplitude(c, j, idx % w, times[idx / w]);
  });
  return series;
}

double default_ode_step(const JacobiSeq& j, std::size_t levels) {
  const double rate = j.scale() * gershgorin_radius(j, levels);
  return rate > 0.0 ? std::min(0.01, 0.02 / rate) : 0.01;
}

AmplitudeSeries amplitude_ode(const JacobiSeq& j, std::size_t K, std::span<const double> times,
                              OdeOptions options) {
  for (double t : times)
    if (!(t >= 0.0) || !std::isfinite(t))
      fail(ErrorCode::ParameterOutOfDomain, "ODE times must be finite and non-negative");
  std::size_t levels = K + 1;
  bool truncated = true;
  if (j.levels() && *j.levels() <= levels) {
    levels = *j.levels();
    truncated = false;
  }
  const double h_max = options.step > 0.0 ? options.step : default_ode_step(j, levels);
  const double g = j.scale();

  std::vector<double> diag(levels), off(levels, 0.0);  // off[i] couples i and i+1
  for (std::size_t i = 0; i < levels; ++i) {
    diag[i] = g * j.alpha(i + 1);
    if (i + 1 < levels) off[i] = g * std::sqrt(j.omega(i + 1));
  }
  // dq/dt = −i H q
  auto deriv = [&](const std::vector<cd>& q, std::vector<cd>& out) {
    for (std::size_t i = 0; i < levels; ++i) {
      cd acc = diag[i] * q[i];
      if (i > 0) acc += off[i - 1] * q[i - 1];
      if (i + 1 < levels) acc += off[i] * q[i + 1];
      out[i] = cd{acc.imag(), -acc.real()};
    }
  };

  std::vector<cd> q(levels, 0.0), k1(levels), k2(levels), k3(levels), k4(levels), tmp(levels);
  q[0] = 1.0;
  auto rk4 = [&](double h) {
    deriv(q, k1);
    for (std::size_t i = 0; i < levels; ++i) tmp[i] = q[i] + 0.5 * h * k1[i];
    deriv(tmp, k2);
    for (std::size_t i = 0; i < levels; ++i) tmp[i] = q[i] + 0.5 * h * k2[i];
    deriv(tmp, k3);
    for (std::size_t i = 0; i < levels; ++i) tmp[i] = q[i] + h * k3[i];
    deriv(tmp, k4);
    for (std::size_t i = 0; i < levels; ++i)
      q[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  };

  AmplitudeSeries series({times.begin(), times.end()}, levels - 1, Method::ODE);
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
  double now = 0.0;
  for (std::size_t ti : order) {
    const double target = times[ti];
    const double span = target - now;
    if (span > 0.0) {
      const auto steps = static_cast<std::size_t>(std::ceil(span / h_max - 1e-12));
      const double h = span / static_cast<double>(steps);
      for (std::size_t s = 0; s < steps; ++s) rk4(h);
      now = target;
    }
    for (std::size_t k = 0; k < levels; ++k) series.at(ti, k) = q[k];
    if (truncated) series.max_tail_mass = std::max(series.max_tail_mass, std::norm(q[levels - 1]));
  }
  if (truncated && series.max_tail_mass > options.tail_tolerance)
    fail(ErrorCode::TailMassExceeded,
         "|q_K|^2 reached " + std::to_string(series.max_tail_mass) + " at truncation level " +
             std::to_string(levels - 1));
  return series;
}

cd site_amplitude(const Graph& g, const Stratification& s, const JacobiSeq& j, Vertex vertex,
                  double t) {
  if (vertex >= g.vertex_count()) fail(ErrorCode::IndexOutOfRange, "vertex out of range");
  if (!j.levels()) fail(ErrorCode::ParameterOutOfDomain, "site amplitudes need a finite sequence");
  const std::size_t k = s.distance.at(vertex);
  const auto mu = jacobi_to_quadrature(j, *j.levels());
  const double size = static_cast<double>(s.strata.at(k).size());
  return amplitude_quadrature(mu, j, k, t) / std::sqrt(size);
}

double avg_probability(const DiscreteMeasure& mu, const JacobiSeq& j, std::size_t k) {
  for (std::size_t l = 1; l < mu.size(); ++l)
    if (std::abs(mu.nodes[l] - mu.nodes[l - 1]) < 1e-9)
      fail(ErrorCode::DegenerateNodes, "nodes " + std::to_string(l - 1) + " and " +
                                           std::to_string(l) + " coincide within 1e-9");
  double p = 0.0;
  for (std::size_t l = 0; l < mu.size(); ++l) {
    const double pk = orthonormal_polys(j, k, mu.nodes[l])[k];
    p += mu.weights[l] * mu.weights[l] * pk * pk;
  }
  return p;
}

cd product_amplitude(std::span<const GroundAmplitude> factors, double t) {
  cd acc = 1.0;
  for (const auto& f : factors) acc *= f(t);
  return acc;
}

}  // namespace ctqw
