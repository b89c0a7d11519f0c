#include "ctqw/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ctqw/error.hpp"

namespace ctqw {

namespace {

constexpr double pi = std::numbers::pi;

struct Line {
  double slope = 0.0, intercept = 0.0, slope_se = 0.0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  Line fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ssr += r * r;
  }
  fit.slope_se = x.size() > 2 ? std::sqrt(ssr / (n - 2.0) / sxx) : 0.0;
  return fit;
}

// Vertex of the parabola through three samples.
std::pair<double, double> refine_peak(double t0, double v0, double t1, double v1, double t2, double v2) {
  const double d0 = (t0 - t1) * (t0 - t2);
  const double d1 = (t1 - t0) * (t1 - t2);
  const double d2 = (t2 - t0) * (t2 - t1);
  const double a = v0 / d0 + v1 / d1 + v2 / d2;
  const double b = -(v0 * (t1 + t2) / d0 + v1 * (t0 + t2) / d1 + v2 * (t0 + t1) / d2);
  if (!(a < 0.0)) return {t1, v1};
  const double ts = std::clamp(-b / (2.0 * a), t0, t2);
  const double vs = v0 * (ts - t1) * (ts - t2) / d0 + v1 * (ts - t0) * (ts - t2) / d1 +
                    v2 * (ts - t0) * (ts - t1) / d2;
  return {ts, std::max(vs, v1)};
}

std::pair<std::vector<double>, std::vector<double>> envelope_samples(std::span<const double> t,
                                                                    std::span<const double> v,
                                                                    bool peaks) {
  std::vector<double> lt, lv;
  if (!peaks) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (v[i] > 0.0 && t[i] > 0.0) {
        lt.push_back(std::log(t[i]));
        lv.push_back(std::log(v[i]));
      }
    return {lt, lv};
  }
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double a = std::abs(v[i - 1]), b = std::abs(v[i]), c = std::abs(v[i + 1]);
    if (b > a && b >= c && b > 0.0) {
      const auto [ts, vs] = refine_peak(t[i - 1], a, t[i], b, t[i + 1], c);
      lt.push_back(std::log(ts));
      lv.push_back(std::log(vs));
    }
  }
  return {lt, lv};
}

}  // namespace

double AsymptoticForm::envelope(double t) const {
  double e = amplitude_coeff * std::pow(t, -decay_exponent);
  if (kind == Kind::Gaussian) e *= std::exp(-gaussian_rate * t * t);
  return e;
}

double AsymptoticForm::value(double t) const {
  if (kind == Kind::Oscillatory) return envelope(t) * std::cos(frequency * t - phase_offset);
  return envelope(t);
}

AsymptoticForm stationary_phase_edge(const ContinuousMeasure& mu, double scale) {
  if (!(scale > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "scale must be positive");
  if (!mu.bounded() || std::abs(mu.lo + mu.hi) > 1e-12 * std::max(1.0, std::abs(mu.hi)))
    fail(ErrorCode::UnsupportedEdgeBehavior, "stationary phase needs a symmetric bounded support");
  double beta = 0.0;
  switch (mu.edge) {
    case EdgeBehavior::InverseSqrt: beta = -0.5; break;
    case EdgeBehavior::Sqrt: beta = 0.5; break;
    case EdgeBehavior::None:
      fail(ErrorCode::UnsupportedEdgeBehavior, "measure carries no endpoint classification");
  }
  if (!(mu.edge_coeff > 0.0) || !std::isfinite(mu.edge_coeff))
    fail(ErrorCode::UnsupportedEdgeBehavior, "edge coefficient must be finite and positive");
  AsymptoticForm f;
  f.kind = AsymptoticForm::Kind::Oscillatory;
  f.decay_exponent = beta + 1.0;
  f.amplitude_coeff = 2.0 * mu.edge_coeff * std::tgamma(beta + 1.0) * std::pow(scale, -(beta + 1.0));
  f.frequency = mu.hi * scale;
  f.phase_offset = (beta + 1.0) * pi / 2.0;
  return f;
}

AsymptoticForm laguerre_asymptotic(double a, double gamma, std::size_t k) {
  if (!(a > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "Laguerre asymptotics need a > 0");
  if (!(gamma > -1.0)) fail(ErrorCode::ParameterOutOfDomain, "Laguerre asymptotics need gamma > -1");
  const double kd = static_cast<double>(k);
  const double log_binom = std::lgamma(gamma + kd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(gamma + 1.0);
  AsymptoticForm f;
  f.kind = AsymptoticForm::Kind::Modulus;
  f.decay_exponent = gamma + 1.0;
  f.amplitude_coeff = std::exp(0.5 * log_binom - (gamma + 1.0) * std::log(a));
  f.frequency = -a * (1.0 + gamma);  // b
  return f;
}

AsymptoticForm hermite_asymptotic(std::size_t k) {
  AsymptoticForm f;
  f.kind = AsymptoticForm::Kind::Gaussian;
  f.amplitude_coeff = std::exp(-0.5 * std::lgamma(static_cast<double>(k) + 1.0));
  f.decay_exponent = -static_cast<double>(k);
  f.gaussian_rate = 0.5;
  return f;
}

double finite_infinite_diff(std::size_t n, double t) {
  if (n == 0) fail(ErrorCode::ParameterOutOfDomain, "pi(n,t) needs n >= 1");
  // the node set is symmetric, so the sum is real
  double sum = 0.0;
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    sum += std::cos(t * std::cos(static_cast<double>(2 * k + 1) * pi / (2.0 * nd)));
  return std::abs(std::cyl_bessel_j(0.0, std::abs(t)) - sum / nd);
}

double max_finite_infinite_diff(std::size_t n, double t_max, double dt) {
  const auto steps = static_cast<std::size_t>(std::ceil(t_max / dt));
  double best = 0.0;
  for (std::size_t i = 0; i <= steps; ++i)
    best = std::max(best, finite_infinite_diff(n, t_max * static_cast<double>(i) / static_cast<double>(steps)));
  return best;
}

std::vector<double> wkb_grid(const AsymptoticForm& form, double t1, double t2, std::size_t min_points) {
  if (!(t1 > 0.0) || !(t2 > t1)) fail(ErrorCode::ParameterOutOfDomain, "need 0 < t1 < t2");
  std::size_t n = std::max<std::size_t>(min_points, 2);
  if (form.kind == AsymptoticForm::Kind::Oscillatory && form.frequency > 0.0) {
    // spacing near t2 is about t2·ln(t2/t1)/n; keep it below period/32
    const double period = 2.0 * pi / form.frequency;
    n = std::max(n, static_cast<std::size_t>(std::ceil(32.0 * t2 * std::log(t2 / t1) / period)) + 1);
  }
  std::vector<double> grid(n);
  const double l1 = std::log(t1), l2 = std::log(t2);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = std::exp(l1 + (l2 - l1) * static_cast<double>(i) / static_cast<double>(n - 1));
  grid.front() = t1;
  grid.back() = t2;
  return grid;
}

PowerFit fit_power_law(std::span<const double> t, std::span<const double> v, bool peaks) {
  if (t.size() != v.size()) fail(ErrorCode::DimensionMismatch, "time and value lengths differ");
  auto [lt, lv] = envelope_samples(t, v, peaks);
  if (lt.size() < 3) fail(ErrorCode::WindowTooShort, "fewer than 3 envelope points in the window");
  const auto line = least_squares(lt, lv);
  PowerFit fit;
  fit.exponent = -line.slope;
  fit.half_width = line.slope_se;
  fit.coeff = std::exp(line.intercept);
  fit.points = lt.size();
  return fit;
}

WkbReport wkb_validate(const AmplitudeSeries& exact, std::size_t k, const AsymptoticForm& approx,
                       double t1, double t2) {
  if (k > exact.kmax) fail(ErrorCode::IndexOutOfRange, "stratum outside the series");
  if (!(t2 > t1) || !(t1 > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "need 0 < t1 < t2");
  const bool oscillatory = approx.kind == AsymptoticForm::Kind::Oscillatory;
  if (oscillatory && approx.frequency * (t2 - t1) / (2.0 * pi) < 3.0)
    fail(ErrorCode::WindowTooShort, "window covers fewer than 3 oscillation periods");

  std::vector<double> ts, mods;
  WkbReport r;
  r.t1 = t1;
  r.t2 = t2;
  r.p_theory = approx.decay_exponent;
  r.C_theory = approx.amplitude_coeff;
  double err_sum = 0.0;
  for (std::size_t i = 0; i < exact.times.size(); ++i) {
    const double t = exact.times[i];
    if (t < t1 || t > t2) continue;
    const auto q = exact.at(i, k);
    const double env = approx.envelope(t);
    const double err = oscillatory ? std::abs(q - approx.value(t)) / env
                                   : std::abs(std::abs(q) - env) / env;
    r.max_coeff_error = std::max(r.max_coeff_error, err);
    err_sum += err;
    ts.push_back(t);
    mods.push_back(std::abs(q));
  }
  if (ts.size() < 3) fail(ErrorCode::WindowTooShort, "fewer than 3 samples in the window");
  r.mean_coeff_error = err_sum / static_cast<double>(ts.size());

  const auto fit = fit_power_law(ts, mods, oscillatory);
  r.p_fitted = fit.exponent;
  r.p_half_width = fit.half_width;
  r.C_fitted = fit.coeff;
  r.envelope_points = fit.points;

  const std::size_t mid = ts.size() / 2;
  const std::span<const double> all_t(ts), all_v(mods);
  const auto first = fit_power_law(all_t.subspan(0, mid + 1), all_v.subspan(0, mid + 1), oscillatory);
  const auto second = fit_power_law(all_t.subspan(mid), all_v.subspan(mid), oscillatory);
  r.half_window_gap = std::abs(first.exponent - second.exponent);
  r.power_law_rejected =
      r.half_window_gap > 0.05 + 3.0 * (first.half_width + second.half_width);
  return r;
}

}  // namespace ctqw
