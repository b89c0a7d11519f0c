#include "ctqw/moments.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ctqw/error.hpp"

namespace ctqw {

namespace {

// Stirling numbers of the second kind S(q, j), q, j ≤ 4.
constexpr std::array<std::array<double, 5>, 5> kStirling2{{
    {1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0},
    {0, 1, 1, 0, 0},
    {0, 1, 3, 1, 0},
    {0, 1, 7, 6, 1},
}};

// Raw moment from factorial moments f(j) = E[(k)_j].
template <typename F>
double raw_from_factorial(unsigned q, F factorial_moment) {
  double s = 0.0;
  for (unsigned j = 0; j <= q; ++j) s += kStirling2[q][j] * factorial_moment(j);
  return s;
}

double ipow(double x, unsigned q) {
  double r = 1.0;
  for (unsigned i = 0; i < q; ++i) r *= x;
  return r;
}

}  // namespace

std::vector<double> moments_from_series(const AmplitudeSeries& series, unsigned q,
                                        MomentConvention convention) {
  if (series.max_tail_mass > 1e-8)
    fail(ErrorCode::TailMassExceeded, "series tail mass " + std::to_string(series.max_tail_mass) +
                                          " is too large for moments");
  std::vector<double> out(series.times.size(), 0.0);
  for (std::size_t ti = 0; ti < series.times.size(); ++ti) {
    double s = 0.0;
    for (std::size_t k = 0; k <= series.kmax; ++k) {
      const double p = std::norm(series.at(ti, k));
      const double kd = static_cast<double>(k);
      if (convention == MomentConvention::Strata) {
        s += ipow(kd, q) * p;
      } else if (q == 0) {
        s += p;
      } else if (k >= 1) {
        s += (ipow(kd, q) + ipow(-kd, q)) * p;
      }
    }
    out[ti] = s;
  }
  return out;
}

std::vector<double> sigma_from_series(const AmplitudeSeries& series, MomentConvention convention) {
  const auto m1 = moments_from_series(series, 1, convention);
  const auto m2 = moments_from_series(series, 2, convention);
  std::vector<double> out(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) out[i] = std::sqrt(std::max(0.0, m2[i] - m1[i] * m1[i]));
  return out;
}

double closed_moments(const FamilySpec& spec, unsigned q, double t) {
  if (q > 4) fail(ErrorCode::UnsupportedMomentOrder, "closed moments are available for q <= 4");
  const double tau = spec.scale.value_or(default_scale(spec)) * t;
  switch (spec.kind) {
    case FamilyKind::HermiteInfinite: {
      const double lambda = tau * tau;
      return raw_from_factorial(q, [&](unsigned j) { return ipow(lambda, j); });
    }
    case FamilyKind::Laguerre: {
      const double a = spec.param_or("a", 1.0);
      const double g = spec.param_or("gamma", 0.0);
      if (!(a > 0.0) || !(g > -1.0))
        fail(ErrorCode::ParameterOutOfDomain, "Laguerre moments need a > 0 and gamma > -1");
      const double u = a * a * tau * tau;
      const double r = g + 1.0;
      return raw_from_factorial(q, [&](unsigned j) {
        double rising = 1.0;
        for (unsigned i = 0; i < j; ++i) rising *= r + static_cast<double>(i);
        return rising * ipow(u, j);
      });
    }
    case FamilyKind::Line: {
      const double x = 2.0 * tau;  // q_k = √2(−i)^k J_k(x)
      switch (q) {
        case 0: return 1.0;
        case 2: return x * x;
        case 4: return 0.75 * ipow(x, 4) + x * x;
        default: return 0.0;
      }
    }
    default:
      fail(ErrorCode::UnsupportedFamily,
           std::string(family_name(spec.kind)) + " has no closed moment formula");
  }
}

double closed_sigma(const FamilySpec& spec, double t) {
  const double m1 = closed_moments(spec, 1, t);
  const double m2 = closed_moments(spec, 2, t);
  return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

ExponentFit fit_exponent(std::span<const double> t, std::span<const double> sigma) {
  if (t.size() != sigma.size()) fail(ErrorCode::DimensionMismatch, "time and sigma lengths differ");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] > 0.0 && sigma[i] > 0.0) {
      x.push_back(std::log(t[i]));
      y.push_back(std::log(sigma[i]));
    }
  if (x.size() < 20)
    fail(ErrorCode::InsufficientSpan, "exponent fit needs at least 20 usable points, got " +
                                          std::to_string(x.size()));
  double lo = x.front(), hi = x.front();
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo < std::log(10.0) - 1e-12)
    fail(ErrorCode::InsufficientSpan, "exponent fit needs at least one decade in t");

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
  ExponentFit fit;
  fit.nu = sxy / sxx;
  const double intercept = my - fit.nu * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - intercept - fit.nu * x[i];
    ssr += r * r;
  }
  fit.half_width = std::sqrt(ssr / (n - 2.0) / sxx);
  fit.coeff = std::exp(intercept);
  fit.points = x.size();
  return fit;
}

MomentReport moment_report(const AmplitudeSeries& series, std::span<const unsigned> orders,
                           MomentConvention convention) {
  MomentReport r;
  r.q_orders.assign(orders.begin(), orders.end());
  r.times = series.times;
  for (unsigned q : orders) r.values.push_back(moments_from_series(series, q, convention));
  r.sigma = sigma_from_series(series, convention);
  try {
    r.nu = fit_exponent(r.times, r.sigma);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientSpan) throw;
  }
  return r;
}

}  // namespace ctqw
