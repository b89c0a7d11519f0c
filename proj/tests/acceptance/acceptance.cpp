// Acceptance gate: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "ctqw/amplitudes.hpp"
#include "ctqw/asymptotics.hpp"
#include "ctqw/error.hpp"
#include "ctqw/families.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/moments.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/spectral.hpp"

using namespace ctqw;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

constexpr double kOracleTol = 1e-8;
constexpr double kOracleSeconds = 30.0;
constexpr double kClosedTol = 1e-8;
constexpr double kLineOdeTol = 1e-6;
constexpr std::size_t kLineOdeLevels = 200;
constexpr double kLineOdeTmax = 50.0;
constexpr double kPoissonRelTol = 1e-12;
constexpr double kHermiteOdeTol = 1e-6;
constexpr std::size_t kHermiteOdeLevels = 400;
constexpr double kHermiteTmax = 10.0;
constexpr double kLaguerreExponent = 1.0;
constexpr double kLaguerreExponentTol = 0.01;
constexpr double kSigmaRelTol = 1e-12;
constexpr double kNuHermiteTol = 0.01;
constexpr double kNuLineTol = 0.02;
constexpr double kNuLaguerreTol = 0.02;
constexpr double kPiSmall = 1e-3;
constexpr double kPiLarge = 1e-2;
constexpr double kWkbCoeffRelTol = 0.05;
constexpr double kWkbExponent = 0.5;
constexpr double kWkbExponentTol = 0.02;
constexpr double kWkbT1 = 50.0;
constexpr double kWkbT2 = 400.0;
constexpr double kLemmaTol = 1e-12;
constexpr double kExactnessRelTol = 1e-10;
constexpr std::size_t kExactnessOrder = 30;

const double kGrid[] = {0.1, 1.0, 5.0, 20.0};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::string> finite_specs() {
  std::vector<std::string> s;
  for (int n = 2; n <= 10; ++n) s.push_back("complete:n=" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) s.push_back("cycle:n=" + std::to_string(n));
  for (int n = 2; n <= 12; ++n) s.push_back("path:n=" + std::to_string(n));
  for (int n = 1; n <= 3; ++n) s.push_back("glued-trees:n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) s.push_back("hypercube:n=" + std::to_string(n));
  return s;
}

std::vector<double> log_grid(double a, double b, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
  return t;
}

cd gauss_amplitude(const JacobiSeq& j, std::size_t k, double t) {
  const std::size_t order = j.levels() ? *j.levels() : default_quadrature_order(j, t);
  return amplitude_quadrature(jacobi_to_quadrature(j, order), j, k, t);
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string where;
  std::size_t checks = 0;
  for (const auto& name : finite_specs()) {
    const auto spec = parse_family(name);
    const auto g = family_graph(spec);
    const auto s = stratify(g);
    const auto j = family_jacobi(spec);
    const auto mu = jacobi_to_quadrature(j, *j.levels());
    const DenseEvolution ev(g);
    for (double t : kGrid) {
      const auto q = stratum_project(ev.evolve(j.scale(), t), s);
      for (std::size_t k = 0; k < q.size(); ++k, ++checks) {
        const double d = std::abs(q[k] - amplitude_quadrature(mu, j, k, t));
        if (d > worst) {
          worst = d;
          where = fmt("%s k=%zu t=%g", name.c_str(), k, t);
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = worst < kOracleTol && secs < kOracleSeconds;
  o.detail = fmt("%zu amplitudes, max |quadrature - oracle| %.2e at %s (tol %.0e), %.2f s (limit %.0f s)",
                 checks, worst, where.c_str(), kOracleTol, secs, kOracleSeconds);
  return o;
}

Outcome closed_form_catalog() {
  Outcome o;
  auto specs = finite_specs();
  for (const char* s : {"line", "comb", "star:N=2", "hermite", "laguerre:a=1,gamma=0", "laguerre:a=1,gamma=0.5",
                        "hermite-finite:n=3", "tchebichef1:m=2,n=6", "tchebichef1:m=2", "tchebichef2:m=2,n=5",
                        "tchebichef2:m=2", "vector", "angular-momentum:n=3", "class-a:a=2,b=1,n=4",
                        "class-b:a=2,b=0.5,n=3"})
    specs.emplace_back(s);
  constexpr std::size_t kmax = 5;
  double worst = 0.0;
  std::string where;
  std::size_t checks = 0, skipped = 0;
  for (const auto& name : specs) {
    const auto spec = parse_family(name);
    const auto j = family_jacobi(spec);
    const std::size_t top = j.levels() ? std::min(*j.levels() - 1, kmax) : kmax;
    for (double t : kGrid) {
      const auto mu = jacobi_to_quadrature(j, j.levels() ? *j.levels() : default_quadrature_order(j, t));
      for (std::size_t k = 0; k <= top; ++k) {
        cd closed;
        try {
          closed = amplitude_closed_form(spec, k, t);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoClosedForm) throw;
          if (k == 0) {
            o.pass = false;
            o.notes.push_back(name + ": no ground-stratum formula");
          }
          ++skipped;
          continue;
        }
        ++checks;
        const double d = std::abs(closed - amplitude_quadrature(mu, j, k, t));
        if (d > worst) {
          worst = d;
          where = fmt("%s k=%zu t=%g", name.c_str(), k, t);
        }
      }
    }
  }
  o.pass = o.pass && worst < kClosedTol;
  o.detail = fmt("%zu families, %zu amplitudes (%zu strata without a printed formula), max |closed - quadrature| "
                 "%.2e at %s (tol %.0e)",
                 specs.size(), checks, skipped, worst, where.c_str(), kClosedTol);
  return o;
}

Outcome infinite_line() {
  Outcome o;
  const auto j = family_jacobi(parse_family("line"));
  std::vector<double> times;
  for (double t = 0.0; t <= kLineOdeTmax + 1e-9; t += 0.25) times.push_back(t);
  const auto s = amplitude_ode(j, kLineOdeLevels, times);
  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i)
    for (std::size_t k = 0; k <= kLineOdeLevels; ++k) {
      // e^{−iHt} carries (−i)^k; the conjugate phase i^k belongs to e^{+iHt}
      const double jk = std::cyl_bessel_j(static_cast<double>(k), times[i]);
      const cd phase = std::pow(cd{0.0, -1.0}, static_cast<int>(k % 4));
      const cd expect = k == 0 ? cd{jk, 0.0} : std::sqrt(2.0) * phase * jk;
      worst = std::max(worst, std::abs(s.at(i, k) - expect));
    }
  o.pass = worst < kLineOdeTol;
  o.detail = fmt("K=%zu, t in [0, %g] step 0.25, all k <= K: max |ode - sqrt2 (-i)^k J_k(t)| %.2e (tol %.0e)",
                 kLineOdeLevels, kLineOdeTmax, worst, kLineOdeTol);
  return o;
}

Outcome hermite_poisson() {
  Outcome o;
  const auto spec = parse_family("hermite");
  std::vector<double> times;
  for (double t = 0.0; t <= kHermiteTmax + 1e-9; t += 0.25) times.push_back(t);
  constexpr std::size_t kmax = 150;
  double worst_law = 0.0, worst_ode = 0.0;
  const auto s = amplitude_ode(family_jacobi(spec), kHermiteOdeLevels, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    for (std::size_t k = 0; k <= kmax; ++k) {
      const double kd = static_cast<double>(k);
      const double poisson = t == 0.0 ? (k == 0 ? 1.0 : 0.0)
                                      : std::exp(2.0 * kd * std::log(t) - t * t - std::lgamma(kd + 1.0));
      const cd closed = amplitude_closed_form(spec, k, t);
      if (poisson > 1e-290) worst_law = std::max(worst_law, std::abs(std::norm(closed) - poisson) / poisson);
      worst_ode = std::max(worst_ode, std::abs(s.at(i, k) - closed));
    }
  }
  o.pass = worst_law < kPoissonRelTol && worst_ode < kHermiteOdeTol;
  o.detail = fmt("k <= %zu, t in [0, %g]: max rel ||q_k|^2 - Poisson| %.2e (tol %.0e); ODE K=%zu max dev %.2e (tol %.0e)",
                 kmax, kHermiteTmax, worst_law, kPoissonRelTol, kHermiteOdeLevels, worst_ode, kHermiteOdeTol);
  return o;
}

Outcome laguerre_decay() {
  Outcome o;
  const auto spec = parse_family("laguerre:a=1,gamma=0");
  const auto times = log_grid(100.0, 1000.0, 400);
  const auto exact = amplitude_closed_form_series(spec, 0, times);
  // cross-check the series against Gauss quadrature where the latter is cheap
  const double cross = std::abs(amplitude_closed_form(spec, 0, 3.0) - gauss_amplitude(family_jacobi(spec), 0, 3.0));
  const auto r = wkb_validate(exact, 0, laguerre_asymptotic(1.0, 0.0, 0), 100.0, 1000.0);
  o.pass = std::abs(r.p_fitted - kLaguerreExponent) <= kLaguerreExponentTol && cross < 1e-8;
  o.detail = fmt("fitted exponent of |q_0| on [100, 1000]: -%.5f (expected -%.2f +- %.2f), C %.5f; "
                 "closed vs quadrature at t=3: %.1e",
                 r.p_fitted, kLaguerreExponent, kLaguerreExponentTol, r.C_fitted, cross);
  return o;
}

Outcome moments_universality() {
  Outcome o;
  const auto herm = parse_family("hermite");
  const auto lag = parse_family("laguerre:a=1,gamma=0");
  const auto line = parse_family("line");
  double sigma_dev = 0.0;
  for (double t : log_grid(0.1, 100.0, 50)) sigma_dev = std::max(sigma_dev, std::abs(closed_sigma(herm, t) - t) / t);

  const auto t = log_grid(10.0, 100.0, 40);
  std::vector<double> hs, ls;
  for (double x : t) {
    hs.push_back(closed_sigma(herm, x));
    ls.push_back(closed_sigma(lag, x));
  }
  const auto series = amplitude_ode(family_jacobi(line), 300, t);
  const auto line_sigma = sigma_from_series(series, MomentConvention::SignedLine);
  const double nh = fit_exponent(t, hs).nu, nl = fit_exponent(t, line_sigma).nu, ng = fit_exponent(t, ls).nu;
  o.pass = sigma_dev < kSigmaRelTol && std::abs(nh - 1.0) <= kNuHermiteTol && std::abs(nl - 1.0) <= kNuLineTol &&
           std::abs(ng - 2.0) <= kNuLaguerreTol;
  o.detail = fmt("Hermite max |sigma - t|/t %.1e (tol %.0e); nu on [10, 100]: Hermite %.4f (1 +- %.2f), "
                 "line %.4f (1 +- %.2f, ODE K=300), Laguerre %.4f (2 +- %.2f)",
                 sigma_dev, kSigmaRelTol, nh, kNuHermiteTol, nl, kNuLineTol, ng, kNuLaguerreTol);
  return o;
}

Outcome pi_threshold() {
  Outcome o;
  const double p600 = max_finite_infinite_diff(600, 1000.0);
  const double p300 = max_finite_infinite_diff(300, 1000.0);
  // smallest n with max π below the small threshold, by bisection on [300, 600]
  std::size_t lo = 300, hi = 600;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (max_finite_infinite_diff(mid, 1000.0) < kPiSmall ? hi : lo) = mid;
  }
  o.pass = p600 < kPiSmall && p300 >= kPiLarge;
  o.detail = fmt("max_{t<=1000} pi(600,t) = %.2e (< %.0e), pi(300,t) = %.2e (>= %.0e); crossover below %.0e at n = %zu",
                 p600, kPiSmall, p300, kPiLarge, kPiSmall, hi);
  return o;
}

AsymptoticForm printed_form(double c, double omega, double phase) {
  AsymptoticForm f;
  f.kind = AsymptoticForm::Kind::Oscillatory;
  f.amplitude_coeff = c;
  f.decay_exponent = 0.5;
  f.frequency = omega;
  f.phase_offset = phase;
  return f;
}

Outcome wkb_coefficients() {
  Outcome o;
  struct Case {
    std::string name;
    AsymptoticForm printed;
  };
  std::vector<Case> cases;
  for (int n : {3, 4, 5}) {
    const double c = 4.0 * n * std::tgamma(1.5) / (pi * (n - 2.0) * (n - 2.0));
    cases.push_back({"star:N=" + std::to_string(n), printed_form(c, 2.0, 0.75 * pi)});
  }
  cases.push_back({"comb", printed_form(std::sqrt(2.0 * std::sqrt(2.0) / pi), 1.0 / std::sqrt(2.0), pi / 4.0)});

  for (const auto& c : cases) {
    const auto spec = parse_family(c.name);
    const auto j = family_jacobi(spec);
    const auto grid = wkb_grid(c.printed, kWkbT1, kWkbT2);
    const auto mu = jacobi_to_quadrature(j, default_quadrature_order(j, kWkbT2));
    const auto exact = amplitude_quadrature_series(mu, j, 0, grid);
    const auto r = wkb_validate(exact, 0, c.printed, kWkbT1, kWkbT2);
    const double coeff_rel = std::abs(r.C_fitted / r.C_theory - 1.0);
    const bool ok = coeff_rel <= kWkbCoeffRelTol && std::abs(r.p_fitted - kWkbExponent) <= kWkbExponentTol;
    o.pass = o.pass && ok;
    o.notes.push_back(fmt("%s %s: fitted C %.5f p %.5f vs printed C %.5f p %.2f (coeff dev %.1f%%)",
                          ok ? "ok  " : "miss", c.name.c_str(), r.C_fitted, r.p_fitted, r.C_theory,
                          r.p_theory, 100.0 * coeff_rel));
    if (spec.kind != FamilyKind::StarLattice) continue;

    // the bound states at ±N/√(N−1) never decay; remove them and fit what is left
    const auto measure = closed_form_measure(spec);
    const auto& cm = std::get<ContinuousMeasure>(measure);
    AmplitudeSeries rest = exact;
    double atom_mass = 0.0;
    for (std::size_t i = 0; i < rest.times.size(); ++i)
      for (std::size_t l = 0; l < cm.atoms.size(); ++l)
        rest.at(i, 0) -= cm.atoms.weights[l] * std::polar(1.0, -rest.times[i] * cm.atoms.nodes[l]);
    for (double w : cm.atoms.weights) atom_mass += w;
    const auto edge = stationary_phase_edge(cm, j.scale());
    const auto rr = wkb_validate(rest, 0, edge, kWkbT1, kWkbT2);
    o.notes.push_back(fmt("     %s: atoms of total weight %.4f give a non-decaying term; the remaining continuum "
                          "part has p %.4f, C %.4f (square-root edge: p %.1f, C %.4f)",
                          c.name.c_str(), atom_mass, rr.p_fitted, rr.C_fitted, edge.decay_exponent,
                          edge.amplitude_coeff));
  }
  o.detail = fmt("window [%g, %g], coefficient within %.0f%%, exponent %.2f +- %.2f", kWkbT1, kWkbT2,
                 100.0 * kWkbCoeffRelTol, kWkbExponent, kWkbExponentTol);
  return o;
}

Outcome lemma_one() {
  Outcome o;
  auto specs = finite_specs();
  specs.emplace_back("vector");
  double spread = 0.0, dev = 0.0;
  std::size_t sites = 0;
  for (const auto& name : specs) {
    const auto spec = parse_family(name);
    const auto g = family_graph(spec);
    const auto s = stratify(g);
    const auto j = family_jacobi(spec);
    const DenseEvolution ev(g);
    const auto mu = jacobi_to_quadrature(j, *j.levels());
    for (double t : kGrid) {
      const auto psi = ev.evolve(j.scale(), t);
      for (std::size_t k = 0; k < s.depth(); ++k) {
        const cd expect = amplitude_quadrature(mu, j, k, t) / std::sqrt(static_cast<double>(s.strata[k].size()));
        const cd first = psi[s.strata[k].front()];
        for (Vertex v : s.strata[k]) {
          spread = std::max(spread, std::abs(psi[v] - first));
          dev = std::max(dev, std::abs(psi[v] - expect));
          ++sites;
        }
      }
    }
  }
  o.pass = spread < kLemmaTol && dev < kLemmaTol;
  o.detail = fmt("%zu families, %zu site amplitudes: max within-stratum spread %.2e, max |psi_v - q_k/sqrt|V_k|| "
                 "%.2e (tol %.0e)",
                 specs.size(), sites, spread, dev, kLemmaTol);
  return o;
}

Outcome quadrature_exactness() {
  Outcome o;
  const char* specs[] = {"charlier:a=1,d=2",     "meixner2:a=1,delta=0.5,eta=0.5", "elliptic-a:a=1,k=0.5",
                         "elliptic-b:a=1,k=0.5", "elliptic-c:k=0.5",               "elliptic-d:k=0.5",
                         "carlitz-f:a=1,k=0.5",  "carlitz-g:a=1,k=0.5",            "carlitz-gstar:a=1,k=0.5"};
  double worst = 0.0;
  std::string where;
  for (const char* name : specs) {
    const auto j = family_jacobi(parse_family(name));
    const auto q = jacobi_to_quadrature(j, kExactnessOrder);
    for (std::size_t m = 0; m <= 2 * kExactnessOrder - 1; ++m) {
      // relative to ∫|x|^m dμ so odd moments of symmetric measures are measured on the same footing
      double scale = 0.0;
      for (std::size_t l = 0; l < q.size(); ++l)
        scale += q.weights[l] * std::pow(std::abs(q.nodes[l]), static_cast<double>(m));
      const double rel = std::abs(measure_moment(q, m) - jacobi_moment(j, m)) / scale;
      if (rel > worst) {
        worst = rel;
        where = fmt("%s m=%zu", name, m);
      }
    }
  }
  o.pass = worst < kExactnessRelTol;
  o.detail = fmt("9 coefficient families, n=%zu, m <= %zu: max relative moment error %.2e at %s (tol %.0e)",
                 kExactnessOrder, 2 * kExactnessOrder - 1, worst, where.c_str(), kExactnessRelTol);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"oracle equivalence", oracle_equivalence},
      {"closed-form catalog", closed_form_catalog},
      {"infinite line ODE vs Bessel", infinite_line},
      {"Hermite Poisson law", hermite_poisson},
      {"Laguerre 1/t decay", laguerre_decay},
      {"moments and universality exponents", moments_universality},
      {"finite vs infinite line threshold", pi_threshold},
      {"WKB coefficients (star, comb)", wkb_coefficients},
      {"per-site amplitudes within strata", lemma_one},
      {"Gauss quadrature exactness", quadrature_exactness},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const Error& e) {
      o.pass = false;
      o.detail = std::string("error ") + std::string(to_string(e.code())) + ": " + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
