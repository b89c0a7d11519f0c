#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

inline constexpr std::size_t kDefaultOracleCap = 4096;

/// Dense eigendecomposition A = VΛVᵀ of a graph's adjacency matrix, with the
/// origin expressed in the eigenbasis.
class DenseEvolution {
 public:
  /// Throws GraphTooLarge above `cap` vertices, EigenSolverFailure on failure.
  explicit DenseEvolution(const Graph& g, std::size_t cap = kDefaultOracleCap);

  const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }
  const Eigen::VectorXd& origin_coords() const noexcept { return origin_coords_; }

  /// ψ(t) = V e^{−i·scale·Λ·t} Vᵀ e_origin.
  cvec evolve(double scale, double t) const;
  /// Evolves an arbitrary initial state.
  cvec evolve(std::span<const std::complex<double>> psi0, double scale, double t) const;

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd origin_coords_;
};

cvec dense_evolve(const Graph& g, double scale, double t, std::size_t cap = kDefaultOracleCap);

/// q_k = Σ_{i∈V_k} ψ_i / √|V_k|. Throws DimensionMismatch.
cvec stratum_project(std::span<const std::complex<double>> psi, const Stratification& s);

}  // namespace ctqw
