#include <doctest.h>

#include <cmath>
#include <vector>

#include "ctqw/amplitudes.hpp"
#include "ctqw/error.hpp"
#include "ctqw/families.hpp"
#include "ctqw/moments.hpp"
#include "support.hpp"

using namespace ctqw;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

std::vector<double> log_grid(double a, double b, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
  return t;
}

}  // namespace

TEST_CASE("Poisson moments of the Hermite chain") {
  const auto herm = parse_family("hermite");
  for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
    const double t2 = t * t;
    CHECK(closed_moments(herm, 0, t) == doctest::Approx(1.0));
    CHECK(closed_moments(herm, 1, t) == doctest::Approx(t2));
    CHECK(closed_moments(herm, 2, t) == doctest::Approx(t2 * t2 + t2));
    CHECK(closed_moments(herm, 3, t) == doctest::Approx(t2 * t2 * t2 + 3.0 * t2 * t2 + t2));
    CHECK(closed_sigma(herm, t) == doctest::Approx(t));
  }
}

TEST_CASE("negative binomial moments of the Laguerre chain") {
  const auto lag = parse_family("laguerre:a=1,gamma=0");
  for (double t : {0.5, 1.0, 3.0}) {
    const double t2 = t * t;
    CHECK(closed_moments(lag, 1, t) == doctest::Approx(t2));
    CHECK(closed_moments(lag, 2, t) == doctest::Approx(t2 + 2.0 * t2 * t2));
    CHECK(closed_sigma(lag, t) == doctest::Approx(std::sqrt(t2 + t2 * t2)));
  }
  const auto g = parse_family("laguerre:a=2,gamma=1.5");
  // mean (γ+1)·a²t²
  CHECK(closed_moments(g, 1, 1.5) == doctest::Approx(2.5 * 4.0 * 2.25));
  CHECK(code_of([] { closed_moments(parse_family("laguerre:a=1,gamma=-3"), 1, 1.0); }) ==
        ErrorCode::ParameterOutOfDomain);
}

TEST_CASE("line moments") {
  const auto line = parse_family("line");
  for (double t : {0.5, 4.0, 20.0}) {
    CHECK(closed_moments(line, 1, t) == 0.0);
    CHECK(closed_moments(line, 3, t) == 0.0);
    CHECK(closed_moments(line, 2, t) == doctest::Approx(t * t));
    CHECK(closed_sigma(line, t) == doctest::Approx(t));
  }
  // unfolded series against the closed formula, including q = 4
  const std::vector<double> times{0.5, 3.0, 12.0};
  const auto s = amplitude_closed_form_series(line, 80, times);
  for (unsigned q : {1u, 2u, 4u}) {
    const auto m = moments_from_series(s, q, MomentConvention::SignedLine);
    for (std::size_t i = 0; i < times.size(); ++i)
      CHECK(m[i] == doctest::Approx(closed_moments(line, q, times[i])).epsilon(1e-10).scale(1.0));
  }
  const auto strata = moments_from_series(s, 0);
  for (double v : strata) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed moment errors") {
  CHECK(code_of([] { closed_moments(parse_family("hermite"), 5, 1.0); }) == ErrorCode::UnsupportedMomentOrder);
  CHECK(code_of([] { closed_moments(parse_family("cycle:n=5"), 1, 1.0); }) == ErrorCode::UnsupportedFamily);
  CHECK(code_of([] { closed_sigma(parse_family("comb"), 1.0); }) == ErrorCode::UnsupportedFamily);
}

TEST_CASE("series moments follow the closed formulas") {
  const auto herm = parse_family("hermite");
  std::vector<double> times;
  for (double t = 0.5; t <= 10.0 + 1e-9; t += 0.5) times.push_back(t);
  const auto s = amplitude_ode(family_jacobi(herm), 400, times);
  const auto sig = sigma_from_series(s);
  for (unsigned q : {1u, 2u, 3u}) {
    const auto m = moments_from_series(s, q);
    for (std::size_t i = 0; i < times.size(); ++i)
      CHECK(std::abs(m[i] - closed_moments(herm, q, times[i])) <= 1e-4 * closed_moments(herm, q, times[i]));
  }
  for (std::size_t i = 0; i < times.size(); ++i) CHECK(sig[i] == doctest::Approx(times[i]).epsilon(1e-4));

  const auto lag = parse_family("laguerre:a=1,gamma=0");
  const std::vector<double> lt{0.5, 1.0, 2.0, 3.0};
  const auto ls = amplitude_ode(family_jacobi(lag), 600, lt);
  const auto lm = moments_from_series(ls, 2);
  for (std::size_t i = 0; i < lt.size(); ++i)
    CHECK(lm[i] == doctest::Approx(closed_moments(lag, 2, lt[i])).epsilon(1e-4));
}

TEST_CASE("leaking series are rejected") {
  AmplitudeSeries s({1.0}, 1, Method::ODE);
  s.at(0, 0) = 1.0;
  s.max_tail_mass = 1e-6;
  CHECK(code_of([&] { moments_from_series(s, 1); }) == ErrorCode::TailMassExceeded);
}

TEST_CASE("exponent fits") {
  const auto t = log_grid(1.0, 100.0, 60);
  std::vector<double> lin, quad, flat;
  for (double x : t) {
    lin.push_back(x);
    quad.push_back(0.5 * x * x);
    flat.push_back(3.0);
  }
  CHECK(fit_exponent(t, lin).nu == doctest::Approx(1.0));
  const auto q = fit_exponent(t, quad);
  CHECK(q.nu == doctest::Approx(2.0));
  CHECK(q.coeff == doctest::Approx(0.5));
  CHECK(q.points == 60);
  CHECK(std::abs(fit_exponent(t, flat).nu) < 1e-12);

  const auto short_span = log_grid(1.0, 5.0, 60);
  CHECK(code_of([&] { fit_exponent(short_span, lin); }) == ErrorCode::InsufficientSpan);
  const std::vector<double> few(t.begin(), t.begin() + 10), few_v(lin.begin(), lin.begin() + 10);
  CHECK(code_of([&] { fit_exponent(few, few_v); }) == ErrorCode::InsufficientSpan);
}

TEST_CASE("spreading exponents") {
  const auto t = log_grid(1.0, 20.0, 40);
  std::vector<double> hs, ls;
  for (double x : t) {
    hs.push_back(closed_sigma(parse_family("hermite"), x));
    ls.push_back(closed_sigma(parse_family("laguerre:a=1,gamma=0"), x));
  }
  CHECK(fit_exponent(t, hs).nu == doctest::Approx(1.0).epsilon(1e-10));
  // σ = t√(1+t²) bends from 1 to 2; the fit over [10, 200] sits near 2
  const auto tl = log_grid(10.0, 200.0, 40);
  std::vector<double> lsl;
  for (double x : tl) lsl.push_back(closed_sigma(parse_family("laguerre:a=1,gamma=0"), x));
  CHECK(fit_exponent(tl, lsl).nu == doctest::Approx(2.0).epsilon(0.01));

  const auto line = parse_family("line");
  const auto lt = log_grid(1.0, 60.0, 40);
  const auto series = amplitude_closed_form_series(line, 160, lt);
  const unsigned orders[] = {1, 2};
  const auto rep = moment_report(series, orders, MomentConvention::SignedLine);
  REQUIRE(rep.nu.has_value());
  CHECK(rep.nu->nu == doctest::Approx(1.0).epsilon(0.01));
  CHECK(rep.values.size() == 2);
  CHECK(rep.sigma.size() == lt.size());

  const std::vector<double> brief{1.0, 2.0};
  const auto short_rep = moment_report(amplitude_closed_form_series(line, 10, brief), orders,
                                       MomentConvention::SignedLine);
  CHECK_FALSE(short_rep.nu.has_value());
}
