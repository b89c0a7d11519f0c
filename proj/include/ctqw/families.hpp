#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/jacobi.hpp"
#include "ctqw/measure.hpp"

namespace ctqw {

enum class FamilyKind {
  CompleteK,
  CycleC,
  PathP,
  GluedTreesG,
  Hypercube,
  Line,
  Tchebichef1,
  Tchebichef2,
  HermiteFinite,
  HermiteInfinite,
  Laguerre,
  StarLattice,
  Comb2D,
  VectorGraph,
  AngularMomentum,
  Charlier,
  Meixner2,
  EllipticA,
  EllipticB,
  EllipticC,
  EllipticD,
  CarlitzF,
  CarlitzG,
  CarlitzGstar,
  ProductClassA,
  ProductClassB,
};

/// A named family with its parameters. Parameter names: n, m, a, b, d,
/// gamma, delta, eta, k, N. `scale` overrides the family default.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Line;
  std::map<std::string, double> params;
  std::optional<double> scale;

  bool has(const std::string& name) const { return params.count(name) != 0; }
  /// Throws ParameterOutOfDomain when missing.
  double param(const std::string& name) const;
  double param_or(const std::string& name, double fallback) const;
  /// Integer-valued parameter; throws ParameterOutOfDomain if not integral.
  long iparam(const std::string& name) const;
  long iparam_or(const std::string& name, long fallback) const;
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);
const std::vector<FamilyKind>& all_families();

/// "kind:param=value,param=value"; a bare "kind" is allowed.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

/// True for the kinds family_graph can build.
bool has_explicit_graph(FamilyKind kind);

/// Finite coefficient sequence or lazily generated infinite one.
bool is_infinite_family(const FamilySpec& spec);

/// Default Hamiltonian scale γ for the family (before any override).
double default_scale(const FamilySpec& spec);

Graph family_graph(const FamilySpec& spec);
JacobiSeq family_jacobi(const FamilySpec& spec);

/// n-fold product of the two-level factor ω_1 = a, α = (0, b).
JacobiSeq product_jacobi_classA(double a, double b, long n);
/// n-fold product of the three-level factor ω = (a, a), α = (0, b, 2b).
JacobiSeq product_jacobi_classB(double a, double b, long n);

/// Spectral measure of the unscaled Jacobi operator, where a closed form is known.
/// Throws NoClosedFormMeasure otherwise.
SpectralMeasure closed_form_measure(const FamilySpec& spec);

}  // namespace ctqw
