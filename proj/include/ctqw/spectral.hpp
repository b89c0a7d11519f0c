#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ctqw/jacobi.hpp"
#include "ctqw/measure.hpp"

namespace ctqw {

/// Gauss quadrature of order n from the first n levels (Golub–Welsch).
/// Throws TruncationTooLarge when a finite sequence has fewer than n levels.
DiscreteMeasure jacobi_to_quadrature(const JacobiSeq& j, std::size_t n);

/// Continued fraction 1/(z−α_1−ω_1/(z−α_2−…)) evaluated bottom-up to `depth`
/// levels. Sequences with an asymptotic tail are closed with the exact
/// periodic remainder. Throws DivergentFraction on a non-finite result.
std::complex<double> stieltjes_cf(const JacobiSeq& j, std::complex<double> z, std::size_t depth);

/// ρ(u) = −Im G(u + iε)/π at each grid point. depth 0 picks default_cf_depth.
std::vector<double> stieltjes_inversion(const JacobiSeq& j, std::span<const double> grid,
                                        double eps = 1e-6, std::size_t depth = 0);

/// Quadrature order for a time window ending at t_max (unscaled time).
/// Sequences with a periodic tail use a phase-resolution bound; growing
/// ones double the order until q_0(t_max) agrees to 1e−11 between orders.
std::size_t default_quadrature_order(const JacobiSeq& j, double t_max);

/// Continued-fraction depth: the level count for finite sequences, else
/// 10× a spectral-radius estimate (at least 100).
std::size_t default_cf_depth(const JacobiSeq& j);

/// Gershgorin bound max_k(|α_k| + √ω_{k−1} + √ω_k) over the first `levels` levels.
double gershgorin_radius(const JacobiSeq& j, std::size_t levels);

/// ⟨φ_0|J^m|φ_0⟩ by repeated application of the (untruncated) Jacobi operator.
double jacobi_moment(const JacobiSeq& j, std::size_t m);

/// Σ A_l x_l^m.
double measure_moment(const DiscreteMeasure& mu, std::size_t m);

}  // namespace ctqw
