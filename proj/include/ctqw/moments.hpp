#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ctqw/amplitudes.hpp"
#include "ctqw/families.hpp"

namespace ctqw {

/// Strata: ⟨k^q⟩ = Σ_k k^q |q_k|².
/// SignedLine: the line's strata {±k} are unfolded onto signed sites with
/// weight 2 on |k| ≥ 1, ⟨k^q⟩ = Σ_{k≥1} (k^q + (−k)^q)|q_k|², so that
/// ⟨k²⟩ = t² for q_k = √2(−i)^k J_k(t).
enum class MomentConvention { Strata, SignedLine };

/// ⟨k^q⟩ per time of the series. Throws TailMassExceeded when the series
/// reports truncation leakage above 1e−8.
std::vector<double> moments_from_series(const AmplitudeSeries& series, unsigned q,
                                        MomentConvention convention = MomentConvention::Strata);

/// σ = √(⟨k²⟩ − ⟨k⟩²) per time.
std::vector<double> sigma_from_series(const AmplitudeSeries& series,
                                      MomentConvention convention = MomentConvention::Strata);

/// Closed moments for Hermite (Poisson), Laguerre (negative binomial) and the
/// line (SignedLine convention), q ≤ 4. Time is scaled by the family scale.
/// Throws UnsupportedMomentOrder for q > 4 and UnsupportedFamily otherwise.
double closed_moments(const FamilySpec& spec, unsigned q, double t);

/// √(⟨k²⟩ − ⟨k⟩²) from closed_moments.
double closed_sigma(const FamilySpec& spec, double t);

struct ExponentFit {
  double nu = 0.0;
  double half_width = 0.0;  // standard error of the slope
  double coeff = 0.0;       // σ ≈ coeff·t^ν
  std::size_t points = 0;
};

/// Least-squares slope of log σ against log t over samples with t > 0, σ > 0.
/// Throws InsufficientSpan for fewer than 20 points or less than one decade.
ExponentFit fit_exponent(std::span<const double> t, std::span<const double> sigma);

struct MomentReport {
  std::vector<unsigned> q_orders;
  std::vector<double> times;
  std::vector<std::vector<double>> values;  // values[order index][time index]
  std::vector<double> sigma;
  std::optional<ExponentFit> nu;  // absent when the time span is insufficient
};

MomentReport moment_report(const AmplitudeSeries& series, std::span<const unsigned> orders,
                           MomentConvention convention = MomentConvention::Strata);

}  // namespace ctqw
