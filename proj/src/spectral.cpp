#include "ctqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ctqw/error.hpp"
#include "ctqw/tridiagonal.hpp"

namespace ctqw {

DiscreteMeasure jacobi_to_quadrature(const JacobiSeq& j, std::size_t n) {
  if (n == 0) fail(ErrorCode::TruncationTooLarge, "quadrature order must be at least 1");
  if (j.levels() && n > *j.levels())
    fail(ErrorCode::TruncationTooLarge, "quadrature order " + std::to_string(n) +
                                            " exceeds the " + std::to_string(*j.levels()) +
                                            " available levels");
  std::vector<double> off(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    const double w = j.omega(k);
    if (!(w > 0.0))
      fail(ErrorCode::TruncationTooLarge, "omega_" + std::to_string(k) + " is not positive");
    off[k - 1] = std::sqrt(w);
  }
  auto eig = tridiagonal_eigen(j.alphas(n), std::move(off));
  DiscreteMeasure mu;
  mu.nodes = std::move(eig.values);
  mu.weights.resize(n);
  for (std::size_t l = 0; l < n; ++l) mu.weights[l] = eig.first[l] * eig.first[l];
  return mu;
}

namespace {

// Resolvent of the constant tail: S = 1/(z − α∞ − ω∞ S).
std::complex<double> periodic_tail(const AsymptoticTail& tail, std::complex<double> z) {
  const std::complex<double> w = z - tail.alpha;
  const std::complex<double> root = std::sqrt(w * w - 4.0 * tail.omega);
  const std::complex<double> s1 = (w - root) / (2.0 * tail.omega);
  const std::complex<double> s2 = (w + root) / (2.0 * tail.omega);
  const double m1 = std::abs(s1), m2 = std::abs(s2);
  if (std::abs(m1 - m2) > 1e-12 * std::max(m1, m2)) return m1 < m2 ? s1 : s2;
  // on the band both roots have equal modulus; take the Herglotz branch
  return s1.imag() * z.imag() <= 0.0 ? s1 : s2;
}

}  // namespace

std::complex<double> stieltjes_cf(const JacobiSeq& j, std::complex<double> z, std::size_t depth) {
  if (depth == 0) fail(ErrorCode::ParameterOutOfDomain, "continued fraction depth must be >= 1");
  std::complex<double> f = 0.0;
  if (j.levels()) {
    depth = std::min(depth, *j.levels());
  } else if (j.tail()) {
    f = periodic_tail(*j.tail(), z);
  }
  constexpr double tiny = 1e-30;
  for (std::size_t k = depth; k >= 1; --k) {
    std::complex<double> denom = z - j.alpha(k) - j.omega(k) * f;
    if (denom == 0.0) {
      if (k == 1)
        fail(ErrorCode::DivergentFraction, "continued fraction has a pole at z");
      denom = tiny;
    }
    f = 1.0 / denom;
  }
  if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
    fail(ErrorCode::DivergentFraction, "continued fraction evaluated to a non-finite value");
  return f;
}

std::vector<double> stieltjes_inversion(const JacobiSeq& j, std::span<const double> grid,
                                        double eps, std::size_t depth) {
  if (!(eps > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "eps must be positive");
  if (depth == 0) depth = default_cf_depth(j);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double u : grid)
    out.push_back(-stieltjes_cf(j, {u, eps}, depth).imag() / std::numbers::pi);
  return out;
}

double gershgorin_radius(const JacobiSeq& j, std::size_t levels) {
  if (j.levels()) levels = std::min(levels, *j.levels());
  double r = 0.0;
  for (std::size_t k = 1; k <= levels; ++k) {
    const double below = k + 1 <= levels ? std::sqrt(j.omega(k)) : 0.0;
    r = std::max(r, std::abs(j.alpha(k)) + std::sqrt(j.omega(k - 1)) + below);
  }
  return r;
}

std::size_t default_cf_depth(const JacobiSeq& j) {
  if (j.levels()) return *j.levels();
  const double rho = gershgorin_radius(j, 64);
  return std::max<std::size_t>(100, static_cast<std::size_t>(std::ceil(10.0 * rho)));
}

std::size_t default_quadrature_order(const JacobiSeq& j, double t_max) {
  if (j.levels()) return *j.levels();
  const double tau = std::abs(t_max) * j.scale();
  std::size_t n = std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(4.0 * std::abs(t_max))));
  constexpr std::size_t cap = 16384;
  // the phase e^{−iτx} must be resolved across the spectrum seen by n nodes
  const std::size_t start = n;
  while (j.tail() && n < cap) {
    double max_omega = 0.0;
    for (std::size_t k = 1; k < n; ++k) max_omega = std::max(max_omega, j.omega(k));
    double max_alpha = 0.0;
    for (std::size_t k = 1; k <= n; ++k) max_alpha = std::max(max_alpha, std::abs(j.alpha(k)));
    if (4.0 * tau * (std::sqrt(max_omega) + 0.5 * max_alpha) <= static_cast<double>(n)) return n;
    n *= 2;
  }
  // growing coefficients have no useful resolution bound: double until
  // q_0(t_max) stops moving
  auto ground = [&](std::size_t order) {
    const auto q = jacobi_to_quadrature(j, order);
    std::complex<double> sum = 0.0;
    for (std::size_t l = 0; l < q.size(); ++l) sum += q.weights[l] * std::polar(1.0, -tau * q.nodes[l]);
    return sum;
  };
  n = start;
  auto prev = ground(n);
  while (2 * n <= cap) {
    const auto next = ground(2 * n);
    if (std::abs(next - prev) < 1e-11) return 2 * n;
    prev = next;
    n *= 2;
  }
  return cap;
}

double jacobi_moment(const JacobiSeq& j, std::size_t m) {
  const std::size_t size = m / 2 + 2;
  std::vector<double> v(size, 0.0), next(size, 0.0);
  v[0] = 1.0;
  std::vector<double> off(size), diag(size);
  for (std::size_t i = 0; i < size; ++i) {
    diag[i] = j.alpha(i + 1);
    off[i] = std::sqrt(std::max(0.0, j.omega(i + 1)));
  }
  // ⟨e0|J^m|e0⟩ = ⟨J^{⌊m/2⌋}e0, J^{⌈m/2⌉}e0⟩; both stay within m/2+1 levels
  std::vector<double> half;
  for (std::size_t step = 1; step <= (m + 1) / 2; ++step) {
    for (std::size_t i = 0; i < size; ++i) {
      double acc = diag[i] * v[i];
      if (i > 0) acc += off[i - 1] * v[i - 1];
      if (i + 1 < size) acc += off[i] * v[i + 1];
      next[i] = acc;
    }
    std::swap(v, next);
    if (step == m / 2) half = v;
  }
  if (m / 2 == 0) {
    half.assign(size, 0.0);
    half[0] = 1.0;
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < size; ++i) dot += half[i] * v[i];
  return dot;
}

double measure_moment(const DiscreteMeasure& mu, std::size_t m) {
  double s = 0.0;
  for (std::size_t l = 0; l < mu.size(); ++l)
    s += mu.weights[l] * std::pow(mu.nodes[l], static_cast<double>(m));
  return s;
}

}  // namespace ctqw
