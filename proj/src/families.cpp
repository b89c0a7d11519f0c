#include "ctqw/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ctqw/error.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

namespace {

constexpr double pi = std::numbers::pi;

struct NamedKind {
  FamilyKind kind;
  std::string_view name;
};

constexpr std::array<NamedKind, 26> kNames{{
    {FamilyKind::CompleteK, "complete"},
    {FamilyKind::CycleC, "cycle"},
    {FamilyKind::PathP, "path"},
    {FamilyKind::GluedTreesG, "glued-trees"},
    {FamilyKind::Hypercube, "hypercube"},
    {FamilyKind::Line, "line"},
    {FamilyKind::Tchebichef1, "tchebichef1"},
    {FamilyKind::Tchebichef2, "tchebichef2"},
    {FamilyKind::HermiteFinite, "hermite-finite"},
    {FamilyKind::HermiteInfinite, "hermite"},
    {FamilyKind::Laguerre, "laguerre"},
    {FamilyKind::StarLattice, "star"},
    {FamilyKind::Comb2D, "comb"},
    {FamilyKind::VectorGraph, "vector"},
    {FamilyKind::AngularMomentum, "angular-momentum"},
    {FamilyKind::Charlier, "charlier"},
    {FamilyKind::Meixner2, "meixner2"},
    {FamilyKind::EllipticA, "elliptic-a"},
    {FamilyKind::EllipticB, "elliptic-b"},
    {FamilyKind::EllipticC, "elliptic-c"},
    {FamilyKind::EllipticD, "elliptic-d"},
    {FamilyKind::CarlitzF, "carlitz-f"},
    {FamilyKind::CarlitzG, "carlitz-g"},
    {FamilyKind::CarlitzGstar, "carlitz-gstar"},
    {FamilyKind::ProductClassA, "class-a"},
    {FamilyKind::ProductClassB, "class-b"},
}};

[[noreturn]] void out_of_domain(const FamilySpec& spec, const std::string& what) {
  fail(ErrorCode::ParameterOutOfDomain, std::string(family_name(spec.kind)) + ": " + what);
}

void require(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) out_of_domain(spec, what);
}

double unit_interval_k(const FamilySpec& spec) {
  const double k = spec.param("k");
  require(k > 0.0 && k < 1.0, spec, "k must lie in (0, 1)");
  return k;
}

double positive_a(const FamilySpec& spec) {
  const double a = spec.param_or("a", 1.0);
  require(a > 0.0, spec, "a must be positive");
  return a;
}

JacobiSeq infinite(JacobiSeq::Generator omega, JacobiSeq::Generator alpha,
                   std::optional<AsymptoticTail> tail = std::nullopt) {
  return JacobiSeq::unbounded(std::move(omega), std::move(alpha), 1.0, tail);
}

JacobiSeq zero_alpha_finite(std::vector<double> omega) {
  std::vector<double> alpha(omega.size() + 1, 0.0);
  return JacobiSeq::finite(std::move(omega), std::move(alpha));
}

// ω_1 = 2c², ω_k = c² (arcsine measure of radius 2c), `levels` strata.
JacobiSeq arcsine_finite(double c2, std::size_t levels) {
  std::vector<double> omega(levels - 1, c2);
  if (!omega.empty()) omega[0] = 2.0 * c2;
  return zero_alpha_finite(std::move(omega));
}

JacobiSeq arcsine_infinite(double c2) {
  return infinite([c2](std::size_t k) { return k == 1 ? 2.0 * c2 : c2; },
                  [](std::size_t) { return 0.0; }, AsymptoticTail{c2, 0.0});
}

DiscreteMeasure sorted_atoms(std::vector<std::pair<double, double>> atoms) {
  std::sort(atoms.begin(), atoms.end());
  DiscreteMeasure m;
  for (const auto& [x, w] : atoms) {
    if (!m.nodes.empty() && std::abs(x - m.nodes.back()) <= 1e-12 * std::max(1.0, std::abs(x))) {
      m.weights.back() += w;
      continue;
    }
    m.nodes.push_back(x);
    m.weights.push_back(w);
  }
  return m;
}

// Spectrum of the N-level Jacobi matrix with constant off-diagonal c.
DiscreteMeasure chebyshev2_atoms(std::size_t levels, double c) {
  std::vector<std::pair<double, double>> atoms;
  const double n1 = static_cast<double>(levels + 1);
  for (std::size_t l = 1; l <= levels; ++l) {
    const double theta = static_cast<double>(l) * pi / n1;
    const double s = std::sin(theta);
    atoms.emplace_back(2.0 * c * std::cos(theta), 2.0 / n1 * s * s);
  }
  return sorted_atoms(std::move(atoms));
}

ContinuousMeasure arcsine_measure(double radius) {
  ContinuousMeasure m;
  m.density = [radius](double x) {
    const double r2 = radius * radius - x * x;
    return r2 > 0.0 ? 1.0 / (pi * std::sqrt(r2)) : 0.0;
  };
  m.lo = -radius;
  m.hi = radius;
  m.singular_endpoints = true;
  m.edge = EdgeBehavior::InverseSqrt;
  m.edge_coeff = 1.0 / (pi * std::sqrt(2.0 * radius));
  return m;
}

ContinuousMeasure semicircle_measure(double radius) {
  ContinuousMeasure m;
  const double norm = 2.0 / (pi * radius * radius);
  m.density = [radius, norm](double x) {
    const double r2 = radius * radius - x * x;
    return r2 > 0.0 ? norm * std::sqrt(r2) : 0.0;
  };
  m.lo = -radius;
  m.hi = radius;
  m.edge = EdgeBehavior::Sqrt;
  m.edge_coeff = norm * std::sqrt(2.0 * radius);
  return m;
}

// n-fold additive convolution of a discrete measure with itself.
DiscreteMeasure convolution_power(const DiscreteMeasure& factor, long n) {
  DiscreteMeasure acc{{0.0}, {1.0}};
  for (long i = 0; i < n; ++i) {
    std::vector<std::pair<double, double>> next;
    next.reserve(acc.size() * factor.size());
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < factor.size(); ++b)
        next.emplace_back(acc.nodes[a] + factor.nodes[b], acc.weights[a] * factor.weights[b]);
    std::sort(next.begin(), next.end());
    DiscreteMeasure merged;
    for (const auto& [x, w] : next) {
      if (!merged.nodes.empty() &&
          std::abs(x - merged.nodes.back()) <= 1e-9 * std::max(1.0, std::abs(x))) {
        merged.weights.back() += w;
        continue;
      }
      merged.nodes.push_back(x);
      merged.weights.push_back(w);
    }
    acc = std::move(merged);
  }
  return acc;
}

long positive_n(const FamilySpec& spec, long minimum) {
  const long n = spec.iparam("n");
  require(n >= minimum, spec, "n must be at least " + std::to_string(minimum));
  return n;
}

}  // namespace

double FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    fail(ErrorCode::ParameterOutOfDomain,
         std::string(family_name(kind)) + ": missing parameter '" + name + "'");
  return it->second;
}

double FamilySpec::param_or(const std::string& name, double fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

long FamilySpec::iparam(const std::string& name) const {
  const double v = param(name);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    fail(ErrorCode::ParameterOutOfDomain,
         std::string(family_name(kind)) + ": parameter '" + name + "' must be an integer");
  return static_cast<long>(v);
}

long FamilySpec::iparam_or(const std::string& name, long fallback) const {
  return has(name) ? iparam(name) : fallback;
}

std::string_view family_name(FamilyKind kind) {
  for (const auto& nk : kNames)
    if (nk.kind == kind) return nk.name;
  return "unknown";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (const auto& nk : kNames)
    if (nk.name == name) return nk.kind;
  return std::nullopt;
}

const std::vector<FamilyKind>& all_families() {
  static const std::vector<FamilyKind> kinds = [] {
    std::vector<FamilyKind> out;
    for (const auto& nk : kNames) out.push_back(nk.kind);
    return out;
  }();
  return kinds;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  auto kind = family_from_name(name);
  if (!kind) fail(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
  FamilySpec spec;
  spec.kind = *kind;
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      fail(ErrorCode::ParseError, "expected param=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    double v = 0.0;
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || value.empty())
      fail(ErrorCode::ParseError, "bad numeric value '" + value + "' for " + key);
    if (key == "scale") {
      spec.scale = v;
    } else {
      spec.params[key] = v;
    }
  }
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  std::ostringstream out;
  out << family_name(spec.kind);
  char sep = ':';
  for (const auto& [k, v] : spec.params) {
    out << sep << k << '=' << v;
    sep = ',';
  }
  if (spec.scale) out << sep << "scale=" << *spec.scale;
  return out.str();
}

bool has_explicit_graph(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CompleteK:
    case FamilyKind::CycleC:
    case FamilyKind::PathP:
    case FamilyKind::GluedTreesG:
    case FamilyKind::Hypercube:
    case FamilyKind::VectorGraph:
      return true;
    default:
      return false;
  }
}

bool is_infinite_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Tchebichef1:
    case FamilyKind::Tchebichef2:
      return !spec.has("n");
    case FamilyKind::Line:
    case FamilyKind::HermiteInfinite:
    case FamilyKind::Laguerre:
    case FamilyKind::StarLattice:
    case FamilyKind::Comb2D:
    case FamilyKind::Charlier:
    case FamilyKind::Meixner2:
    case FamilyKind::EllipticA:
    case FamilyKind::EllipticB:
    case FamilyKind::EllipticC:
    case FamilyKind::EllipticD:
    case FamilyKind::CarlitzF:
    case FamilyKind::CarlitzG:
    case FamilyKind::CarlitzGstar:
      return true;
    default:
      return false;
  }
}

double default_scale(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::CompleteK: {
      const long n = positive_n(spec, 1);
      return n == 1 ? 1.0 : 1.0 / static_cast<double>(n - 1);
    }
    case FamilyKind::CycleC:
    case FamilyKind::PathP:
    case FamilyKind::Line:
    case FamilyKind::Tchebichef1:
      return 0.5;
    case FamilyKind::Hypercube:
    case FamilyKind::AngularMomentum:
      return 1.0 / static_cast<double>(positive_n(spec, 1));
    case FamilyKind::Comb2D:
      return 0.25;
    default:
      return 1.0;
  }
}

Graph family_graph(const FamilySpec& spec) {
  std::vector<Edge> edges;
  std::size_t count = 0;
  switch (spec.kind) {
    case FamilyKind::CompleteK: {
      const auto n = static_cast<std::size_t>(positive_n(spec, 1));
      count = n;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
      break;
    }
    case FamilyKind::CycleC: {
      const auto n = static_cast<std::size_t>(positive_n(spec, 3));
      count = n;
      for (std::size_t a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
      break;
    }
    case FamilyKind::PathP: {
      const auto n = static_cast<std::size_t>(positive_n(spec, 1));
      count = n;
      for (std::size_t a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
      break;
    }
    case FamilyKind::GluedTreesG: {
      const long depth = positive_n(spec, 1);
      require(depth <= 20, spec, "n above 20 is too large for an explicit graph");
      const std::size_t leaves = std::size_t{1} << depth;
      const std::size_t tree = 2 * leaves - 1;  // heap-indexed first tree
      const std::size_t internal = leaves - 1;  // second tree, leaves shared
      count = tree + internal;
      for (std::size_t v = 1; v < tree; ++v) edges.emplace_back((v - 1) / 2, v);
      auto second = [&](std::size_t h) { return h < internal ? tree + h : h; };
      for (std::size_t h = 1; h < tree; ++h) edges.emplace_back(second((h - 1) / 2), second(h));
      break;
    }
    case FamilyKind::Hypercube: {
      const long n = positive_n(spec, 1);
      require(n <= 20, spec, "n above 20 is too large for an explicit graph");
      count = std::size_t{1} << n;
      for (std::size_t v = 0; v < count; ++v)
        for (long bit = 0; bit < n; ++bit) {
          const std::size_t w = v ^ (std::size_t{1} << bit);
          if (v < w) edges.emplace_back(v, w);
        }
      break;
    }
    case FamilyKind::VectorGraph:
      count = 7;
      edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 5},
               {2, 6}, {3, 4}, {4, 5}, {5, 6}, {6, 3}};
      break;
    default:
      fail(ErrorCode::UnsupportedFamily,
           std::string(family_name(spec.kind)) + " has no explicit graph (coefficients only)");
  }
  return build_graph(count, edges, 0);
}

JacobiSeq product_jacobi_classA(double a, double b, long n) {
  if (!(a > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "class A needs a > 0");
  if (n < 1) fail(ErrorCode::ParameterOutOfDomain, "class A needs n >= 1");
  std::vector<double> omega, alpha;
  for (long k = 1; k <= n; ++k) omega.push_back(static_cast<double>(k * (n - k + 1)) * a);
  for (long k = 1; k <= n + 1; ++k) alpha.push_back(static_cast<double>(k - 1) * b);
  return JacobiSeq::finite(std::move(omega), std::move(alpha));
}

JacobiSeq product_jacobi_classB(double a, double b, long n) {
  if (!(a > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "class B needs a > 0");
  if (n < 1) fail(ErrorCode::ParameterOutOfDomain, "class B needs n >= 1");
  std::vector<double> omega, alpha;
  for (long k = 1; k <= 2 * n; ++k)
    omega.push_back(0.5 * a * static_cast<double>(k * (2 * n - k + 1)));
  for (long k = 0; k <= 2 * n; ++k) alpha.push_back(static_cast<double>(k) * b);
  return JacobiSeq::finite(std::move(omega), std::move(alpha));
}

namespace {

JacobiSeq unscaled_jacobi(const FamilySpec& spec) {
  using K = FamilyKind;
  switch (spec.kind) {
    case K::CompleteK: {
      const long n = positive_n(spec, 1);
      if (n == 1) return JacobiSeq::finite({}, {0.0});
      return JacobiSeq::finite({static_cast<double>(n - 1)}, {0.0, static_cast<double>(n - 2)});
    }
    case K::CycleC: {
      const long n = positive_n(spec, 3);
      const long m = n / 2;
      std::vector<double> omega(static_cast<std::size_t>(m), 1.0);
      std::vector<double> alpha(static_cast<std::size_t>(m + 1), 0.0);
      omega[0] = 2.0;
      if (n % 2 == 0) omega.back() = 2.0;
      else alpha.back() = 1.0;
      return JacobiSeq::finite(std::move(omega), std::move(alpha));
    }
    case K::PathP: {
      const long n = positive_n(spec, 1);
      return zero_alpha_finite(std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
    }
    case K::GluedTreesG: {
      const long n = positive_n(spec, 1);
      return zero_alpha_finite(std::vector<double>(static_cast<std::size_t>(2 * n), 2.0));
    }
    case K::Hypercube:
      return product_jacobi_classA(1.0, 0.0, positive_n(spec, 1));
    case K::Line:
      return arcsine_infinite(1.0);
    case K::Tchebichef1: {
      const double m = spec.param("m");
      require(m > 0.0, spec, "m must be positive");
      const double c2 = std::pow(4.0, m - 1.0);
      if (!spec.has("n")) return arcsine_infinite(c2);
      return arcsine_finite(c2, static_cast<std::size_t>(positive_n(spec, 1)));
    }
    case K::Tchebichef2: {
      const double m = spec.param("m");
      require(m > 0.0, spec, "m must be positive");
      const double c2 = std::pow(4.0, m - 1.0);
      if (!spec.has("n"))
        return infinite([c2](std::size_t) { return c2; }, [](std::size_t) { return 0.0; },
                        AsymptoticTail{c2, 0.0});
      const long n = positive_n(spec, 1);
      return zero_alpha_finite(std::vector<double>(static_cast<std::size_t>(n), c2));
    }
    case K::HermiteFinite: {
      const long n = positive_n(spec, 1);
      std::vector<double> omega;
      for (long k = 1; k <= n; ++k) omega.push_back(static_cast<double>(n - k + 1));
      return zero_alpha_finite(std::move(omega));
    }
    case K::HermiteInfinite:
      return infinite([](std::size_t k) { return static_cast<double>(k); },
                      [](std::size_t) { return 0.0; });
    case K::Laguerre: {
      const double a = positive_a(spec);
      const double g = spec.param_or("gamma", 0.0);
      require(g > -1.0, spec, "gamma must exceed -1");
      return infinite(
          [a, g](std::size_t k) { return a * a * static_cast<double>(k) * (static_cast<double>(k) + g); },
          [a](std::size_t k) { return 2.0 * static_cast<double>(k - 1) * a; });
    }
    case K::StarLattice: {
      const double n = spec.param("N");
      require(n > 0.0, spec, "N must be positive");
      return infinite([n](std::size_t k) { return k == 1 ? n : 1.0; },
                      [](std::size_t) { return 0.0; }, AsymptoticTail{1.0, 0.0});
    }
    case K::Comb2D:
      return arcsine_infinite(2.0);
    case K::VectorGraph:
      return JacobiSeq::finite({2.0, 2.0}, {0.0, 1.0, 2.0});
    case K::AngularMomentum:
      return product_jacobi_classB(2.0, 1.0, positive_n(spec, 1));
    case K::ProductClassA:
      return product_jacobi_classA(spec.param("a"), spec.param_or("b", 0.0), spec.iparam("n"));
    case K::ProductClassB:
      return product_jacobi_classB(spec.param("a"), spec.param_or("b", 0.0), spec.iparam("n"));
    case K::Charlier: {
      const double a = positive_a(spec);
      const double d = spec.param("d");
      require(d > 0.0, spec, "d must be positive");
      return infinite([a, d](std::size_t n) { return a * a * static_cast<double>(n) * d; },
                      [a](std::size_t k) { return static_cast<double>(k - 1) * a; });
    }
    case K::Meixner2: {
      const double a = positive_a(spec);
      const double delta = spec.param_or("delta", 0.0);
      const double eta = spec.param("eta");
      require(eta > -2.0, spec, "eta must exceed -2");
      return infinite(
          [a, delta, eta](std::size_t n) {
            const double x = static_cast<double>(n);
            return a * a * x * (x + eta + 1.0) * (delta * delta + 1.0);
          },
          [a, delta](std::size_t k) { return 2.0 * a * static_cast<double>(k - 1) * delta; });
    }
    case K::EllipticA: {
      const double a = positive_a(spec);
      const double k = unit_interval_k(spec);
      return infinite(
          [a, k](std::size_t n) {
            const double x = static_cast<double>(n);
            return 4.0 * a * a * x * x * (4.0 * x * x - 1.0) * k * k;
          },
          [a, k](std::size_t j) {
            const double x = static_cast<double>(j - 1);
            return 4.0 * a * x * (x + 1.0) * (1.0 + k * k);
          });
    }
    case K::EllipticB: {
      const double a = positive_a(spec);
      const double k = unit_interval_k(spec);
      return infinite(
          [a, k](std::size_t n) {
            const double x = static_cast<double>(n);
            return 4.0 * a * a * x * (x + 1.0) * (2.0 * x + 1.0) * (2.0 * x + 1.0) * k * k;
          },
          [a, k](std::size_t j) {
            const double x = static_cast<double>(j - 1);
            return 4.0 * a * x * (x + 2.0) * (1.0 + k * k);
          });
    }
    case K::EllipticC: {
      const double k = unit_interval_k(spec);
      return infinite(
          [k](std::size_t n) {
            const double x = static_cast<double>(n);
            return n % 2 == 1 ? x * x : x * x * k * k;
          },
          [](std::size_t) { return 0.0; });
    }
    case K::EllipticD: {
      const double k = unit_interval_k(spec);
      return infinite(
          [k](std::size_t n) {
            const double x = static_cast<double>(n);
            return n % 2 == 1 ? x * x * k * k : x * x;
          },
          [](std::size_t) { return 0.0; });
    }
    case K::CarlitzF:
    case K::CarlitzG: {
      const double a = positive_a(spec);
      const double k = unit_interval_k(spec);
      const double extra = spec.kind == K::CarlitzF ? 1.0 : k * k;
      return infinite(
          [a, k](std::size_t n) {
            const double x = static_cast<double>(n);
            return 4.0 * a * a * x * x * (2.0 * x - 1.0) * (2.0 * x - 1.0) * k * k;
          },
          [a, k, extra](std::size_t j) {
            const double x = static_cast<double>(j - 1);
            return 4.0 * a * x * (x * (1.0 + k * k) + extra);
          });
    }
    case K::CarlitzGstar: {
      const double a = positive_a(spec);
      const double k = unit_interval_k(spec);
      return infinite(
          [a, k](std::size_t n) {
            const double x = static_cast<double>(n);
            return 4.0 * a * a * x * x * (2.0 * x + 1.0) * (2.0 * x + 1.0) * k * k;
          },
          [a, k](std::size_t j) {
            const double x = static_cast<double>(j - 1);
            return 4.0 * a * x * (x + 1.0) * (1.0 + k * k);
          });
    }
  }
  fail(ErrorCode::UnsupportedFamily, "unhandled family");
}

}  // namespace

JacobiSeq family_jacobi(const FamilySpec& spec) {
  JacobiSeq j = unscaled_jacobi(spec);
  const double scale = spec.scale.value_or(default_scale(spec));
  if (!(scale > 0.0)) out_of_domain(spec, "scale must be positive");
  return j.with_scale(scale);
}

SpectralMeasure closed_form_measure(const FamilySpec& spec) {
  using K = FamilyKind;
  switch (spec.kind) {
    case K::CompleteK: {
      const long n = positive_n(spec, 1);
      if (n == 1) return DiscreteMeasure{{0.0}, {1.0}};
      const double nd = static_cast<double>(n);
      return sorted_atoms({{-1.0, (nd - 1.0) / nd}, {nd - 1.0, 1.0 / nd}});
    }
    case K::CycleC: {
      const long n = positive_n(spec, 3);
      std::vector<std::pair<double, double>> atoms;
      for (long l = 0; l < n; ++l)
        atoms.emplace_back(2.0 * std::cos(2.0 * pi * static_cast<double>(l) / static_cast<double>(n)),
                           1.0 / static_cast<double>(n));
      // duplicate eigenvalues from l and n−l are equal only up to rounding
      for (auto& [x, w] : atoms) x = std::round(x * 1e13) / 1e13;
      return sorted_atoms(std::move(atoms));
    }
    case K::PathP:
      return chebyshev2_atoms(static_cast<std::size_t>(positive_n(spec, 1)), 1.0);
    case K::GluedTreesG:
      return chebyshev2_atoms(static_cast<std::size_t>(2 * positive_n(spec, 1) + 1), std::sqrt(2.0));
    case K::Hypercube:
      return convolution_power(DiscreteMeasure{{-1.0, 1.0}, {0.5, 0.5}}, positive_n(spec, 1));
    case K::ProductClassA: {
      const double a = spec.param("a");
      const double b = spec.param_or("b", 0.0);
      const long n = spec.iparam("n");
      require(a > 0.0 && n >= 1, spec, "class A needs a > 0 and n >= 1");
      const double root = std::sqrt(b * b + 4.0 * a);
      const double lm = 0.5 * (b - root), lp = 0.5 * (b + root);
      return convolution_power(
          DiscreteMeasure{{lm, lp}, {a / (a + lm * lm), a / (a + lp * lp)}}, n);
    }
    case K::VectorGraph: {
      const double s5 = std::sqrt(5.0);
      return sorted_atoms({{1.0 - s5, (3.0 + s5) / 10.0},
                           {1.0, 0.4},
                           {1.0 + s5, (3.0 - s5) / 10.0}});
    }
    case K::AngularMomentum:
    case K::ProductClassB: {
      const bool angular = spec.kind == K::AngularMomentum;
      const double a = angular ? 2.0 : spec.param("a");
      const double b = angular ? 1.0 : spec.param_or("b", 0.0);
      const long n = angular ? positive_n(spec, 1) : spec.iparam("n");
      require(a > 0.0 && n >= 1, spec, "class B needs a > 0 and n >= 1");
      const auto factor = jacobi_to_quadrature(JacobiSeq::finite({a, a}, {0.0, b, 2.0 * b}), 3);
      return convolution_power(factor, n);
    }
    case K::Tchebichef1: {
      const double m = spec.param("m");
      require(m > 0.0, spec, "m must be positive");
      const double radius = std::pow(2.0, m);
      if (!spec.has("n")) return arcsine_measure(radius);
      const long n = positive_n(spec, 1);
      std::vector<std::pair<double, double>> atoms;
      for (long l = 0; l < n; ++l)
        atoms.emplace_back(
            radius * std::cos(static_cast<double>(2 * l + 1) * pi / static_cast<double>(2 * n)),
            1.0 / static_cast<double>(n));
      return sorted_atoms(std::move(atoms));
    }
    case K::Tchebichef2: {
      const double m = spec.param("m");
      require(m > 0.0, spec, "m must be positive");
      if (!spec.has("n")) return semicircle_measure(std::pow(2.0, m));
      return chebyshev2_atoms(static_cast<std::size_t>(positive_n(spec, 1) + 1),
                              std::pow(2.0, m - 1.0));
    }
    case K::Line:
      return arcsine_measure(2.0);
    case K::Comb2D:
      return arcsine_measure(2.0 * std::sqrt(2.0));
    case K::HermiteFinite: {
      const auto levels = static_cast<std::size_t>(positive_n(spec, 1) + 1);
      return jacobi_to_quadrature(unscaled_jacobi(spec), levels);
    }
    case K::HermiteInfinite: {
      ContinuousMeasure m;
      m.density = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi); };
      return m;
    }
    case K::Laguerre: {
      const double a = positive_a(spec);
      const double g = spec.param_or("gamma", 0.0);
      require(g > -1.0, spec, "gamma must exceed -1");
      const double b = -a * (1.0 + g);
      const double log_norm = -std::lgamma(g + 1.0) - std::log(a);
      ContinuousMeasure m;
      m.density = [a, b, g, log_norm](double x) {
        const double y = (x - b) / a;
        if (!(y > 0.0)) return 0.0;
        return std::exp(log_norm + g * std::log(y) - y);
      };
      m.lo = b;
      m.singular_endpoints = g < 0.0;
      return m;
    }
    case K::StarLattice: {
      const double n = spec.param("N");
      require(n >= 1.0, spec, "closed-form star measure needs N >= 1");
      ContinuousMeasure m;
      m.density = [n](double x) {
        const double r2 = 4.0 - x * x;
        if (!(r2 > 0.0)) return 0.0;
        return n * std::sqrt(r2) / (2.0 * pi * (n * n - (n - 1.0) * x * x));
      };
      m.lo = -2.0;
      m.hi = 2.0;
      if (n == 2.0) {
        m.singular_endpoints = true;
        m.edge = EdgeBehavior::InverseSqrt;
        m.edge_coeff = 1.0 / (2.0 * pi);
      } else {
        m.edge = EdgeBehavior::Sqrt;
        m.edge_coeff = n / (pi * (n - 2.0) * (n - 2.0));
      }
      if (n > 2.0) {
        const double x0 = n / std::sqrt(n - 1.0);
        const double w = (n - 2.0) / (2.0 * (n - 1.0));
        m.atoms = DiscreteMeasure{{-x0, x0}, {w, w}};
      }
      return m;
    }
    default:
      fail(ErrorCode::NoClosedFormMeasure,
           std::string(family_name(spec.kind)) +
               " has no closed-form measure; use jacobi_to_quadrature");
  }
}

}  // namespace ctqw
