#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ctqw/families.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/jacobi.hpp"
#include "ctqw/measure.hpp"

namespace ctqw {

enum class Method { Quadrature, ODE, ClosedForm, Product, Oracle };

std::string_view to_string(Method m);

/// q_k(t) for k = 0..kmax on a time grid, stored row-major by time.
struct AmplitudeSeries {
  std::vector<double> times;
  std::size_t kmax = 0;
  std::vector<std::complex<double>> values;
  Method method = Method::Quadrature;
  double max_tail_mass = 0.0;  // ODE only: max |q_K|² over the grid

  AmplitudeSeries() = default;
  AmplitudeSeries(std::vector<double> t, std::size_t k, Method m)
      : times(std::move(t)), kmax(k), values(times.size() * (k + 1)), method(m) {}

  std::size_t width() const noexcept { return kmax + 1; }
  std::complex<double>& at(std::size_t ti, std::size_t k) { return values[ti * width() + k]; }
  const std::complex<double>& at(std::size_t ti, std::size_t k) const {
    return values[ti * width() + k];
  }
  /// Σ_k |q_k|² at time index ti.
  double total_probability(std::size_t ti) const;
};

/// Monic Q_k(x) from Q_0 = 1, Q_1 = x − α_1, xQ_n = Q_{n+1} + α_{n+1}Q_n + ω_nQ_{n−1}.
double eval_poly(const JacobiSeq& j, std::size_t k, double x);

/// Orthonormal p_0..p_kmax at x, p_k = Q_k/√(ω_1…ω_k). Entries past the last
/// level of a finite sequence are 0.
std::vector<double> orthonormal_polys(const JacobiSeq& j, std::size_t kmax, double x);

/// q_k(t) = ∫ e^{−iγtx} p_k(x) μ(dx), γ = j.scale().
std::complex<double> amplitude_quadrature(const SpectralMeasure& mu, const JacobiSeq& j,
                                          std::size_t k, double t);

AmplitudeSeries amplitude_quadrature_series(const SpectralMeasure& mu, const JacobiSeq& j,
                                            std::size_t kmax, std::span<const double> times);

struct OdeOptions {
  double step = 0.0;              // 0 selects default_ode_step
  double tail_tolerance = 1e-8;   // bound on |q_K|² when the chain was truncated
};

/// Fixed step for the RK4 integrator: min(0.01, 0.02/(γρ)) with ρ the
/// Gershgorin radius of the truncated Jacobi matrix.
double default_ode_step(const JacobiSeq& j, std::size_t levels);

/// Integrates i dq/dt = γJq from q(0) = e_0 with a reflecting wall after
/// level K (or the last level of a shorter finite sequence). Times must be
/// non-negative. Throws TailMassExceeded when the truncation leaks.
AmplitudeSeries amplitude_ode(const JacobiSeq& j, std::size_t K, std::span<const double> times,
                              OdeOptions options = {});

/// Printed closed form for the family, evaluated at time t with the family's
/// scale. Throws NoClosedForm when the family (or this k) has none.
std::complex<double> amplitude_closed_form(const FamilySpec& spec, std::size_t k, double t);

AmplitudeSeries amplitude_closed_form_series(const FamilySpec& spec, std::size_t kmax,
                                             std::span<const double> times);

/// Per-vertex amplitude q_k(t)/√|V_k| for the vertex's stratum k.
std::complex<double> site_amplitude(const Graph& g, const Stratification& s, const JacobiSeq& j,
                                    Vertex vertex, double t);

/// Long-time average of |q_k|²: Σ_l A_l² p_k(x_l)². Throws DegenerateNodes
/// when two nodes are closer than 1e−9.
double avg_probability(const DiscreteMeasure& mu, const JacobiSeq& j, std::size_t k);

using GroundAmplitude = std::function<std::complex<double>(double)>;

/// Π_i q_0^{(i)}(t).
std::complex<double> product_amplitude(std::span<const GroundAmplitude> factors, double t);

}  // namespace ctqw
