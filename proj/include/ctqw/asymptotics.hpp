#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ctqw/amplitudes.hpp"
#include "ctqw/measure.hpp"

namespace ctqw {

/// Leading large-t behaviour of an amplitude.
///   Oscillatory: C·t^{−p}·cos(Ωt − φ₀)
///   Modulus:     |q| ≈ C·t^{−p}          (Ω carries the residual phase rate)
///   Gaussian:    |q| = C·t^{−p}·e^{−rate·t²}
struct AsymptoticForm {
  enum class Kind { Oscillatory, Modulus, Gaussian };

  Kind kind = Kind::Oscillatory;
  double amplitude_coeff = 0.0;  // C
  double decay_exponent = 0.0;   // p
  double frequency = 0.0;        // Ω
  double phase_offset = 0.0;     // φ₀
  double gaussian_rate = 0.0;

  double envelope(double t) const;
  /// Oscillatory: the signed leading term; otherwise the envelope.
  double value(double t) const;
};

/// Endpoint contribution of a symmetric density on [−c, c] with
/// g(x) ≈ κ(c−|x|)^β near ±c (β = −1/2 or 1/2), under phase e^{−i·scale·t·x}:
/// p = β+1, C = 2κΓ(β+1)·scale^{−(β+1)}, Ω = c·scale, φ₀ = (β+1)π/2.
/// Point masses of the measure are not included.
/// Throws UnsupportedEdgeBehavior for unbounded, asymmetric or unflagged measures.
AsymptoticForm stationary_phase_edge(const ContinuousMeasure& mu, double scale);

/// |q_k(t)| ≈ √C(γ+k, k)·a^{−(γ+1)}·t^{−(γ+1)}.
AsymptoticForm laguerre_asymptotic(double a, double gamma, std::size_t k);

/// |q_k(t)| = t^k e^{−t²/2}/√k! (exact).
AsymptoticForm hermite_asymptotic(std::size_t k);

/// π(n,t) = |J_0(t) − (1/n)Σ_{k<n} e^{−it cos((2k+1)π/(2n))}|.
double finite_infinite_diff(std::size_t n, double t);

/// max over an evenly spaced grid on [0, t_max] (step ≤ dt) of π(n, t).
double max_finite_infinite_diff(std::size_t n, double t_max, double dt = 0.05);

/// Log-spaced grid on [t1, t2] with at least `min_points` points and, for
/// oscillatory forms, at least 32 points per period everywhere.
std::vector<double> wkb_grid(const AsymptoticForm& form, double t1, double t2,
                             std::size_t min_points = 200);

struct PowerFit {
  double exponent = 0.0;    // p in C·t^{−p}
  double half_width = 0.0;  // standard error of p
  double coeff = 0.0;       // C
  std::size_t points = 0;
};

/// Least squares of log|v| against log t. With `peaks` set, only refined
/// local maxima of |v| enter the fit.
PowerFit fit_power_law(std::span<const double> t, std::span<const double> v, bool peaks);

struct WkbReport {
  double max_coeff_error = 0.0;   // max |exact − approx| / envelope
  double mean_coeff_error = 0.0;
  double p_fitted = 0.0;
  double p_half_width = 0.0;
  double C_fitted = 0.0;
  double p_theory = 0.0;
  double C_theory = 0.0;
  double t1 = 0.0, t2 = 0.0;
  std::size_t envelope_points = 0;
  double half_window_gap = 0.0;   // |p(first half) − p(second half)|
  bool power_law_rejected = false;
};

/// Compares q_k of `exact` with `approx` on the samples inside [t1, t2].
/// Throws WindowTooShort for oscillatory forms covering fewer than 3 periods
/// or windows with too few envelope points.
WkbReport wkb_validate(const AmplitudeSeries& exact, std::size_t k, const AsymptoticForm& approx,
                       double t1, double t2);

}  // namespace ctqw
