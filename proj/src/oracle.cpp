#include "ctqw/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "ctqw/error.hpp"

namespace ctqw {

DenseEvolution::DenseEvolution(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap)
    fail(ErrorCode::GraphTooLarge, "graph has " + std::to_string(n) + " vertices, oracle cap is " +
                                       std::to_string(cap));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::EigenSolverFailure, "dense symmetric eigensolver did not converge");
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
  origin_coords_ = vectors_.row(static_cast<Eigen::Index>(g.origin())).transpose();
}

namespace {

// V·c for complex c without forming a complex copy of V.
cvec apply_real(const Eigen::MatrixXd& v, const Eigen::VectorXcd& c) {
  const Eigen::VectorXd re = v * c.real();
  const Eigen::VectorXd im = v * c.imag();
  cvec out(static_cast<std::size_t>(re.size()));
  for (Eigen::Index i = 0; i < re.size(); ++i) out[static_cast<std::size_t>(i)] = {re(i), im(i)};
  return out;
}

}  // namespace

cvec DenseEvolution::evolve(double scale, double t) const {
  const auto n = values_.size();
  Eigen::VectorXcd c(n);
  for (Eigen::Index l = 0; l < n; ++l) c(l) = std::polar(1.0, -scale * t * values_(l)) * origin_coords_(l);
  return apply_real(vectors_, c);
}

cvec DenseEvolution::evolve(std::span<const std::complex<double>> psi0, double scale, double t) const {
  const auto n = values_.size();
  if (static_cast<Eigen::Index>(psi0.size()) != n)
    fail(ErrorCode::DimensionMismatch, "initial state length differs from vertex count");
  Eigen::VectorXcd v0(n);
  for (Eigen::Index i = 0; i < n; ++i) v0(i) = psi0[static_cast<std::size_t>(i)];
  const Eigen::VectorXd re = vectors_.transpose() * v0.real();
  const Eigen::VectorXd im = vectors_.transpose() * v0.imag();
  Eigen::VectorXcd c(n);
  for (Eigen::Index l = 0; l < n; ++l)
    c(l) = std::complex<double>(re(l), im(l)) * std::polar(1.0, -scale * t * values_(l));
  return apply_real(vectors_, c);
}

cvec dense_evolve(const Graph& g, double scale, double t, std::size_t cap) {
  return DenseEvolution(g, cap).evolve(scale, t);
}

cvec stratum_project(std::span<const std::complex<double>> psi, const Stratification& s) {
  if (psi.size() != s.distance.size())
    fail(ErrorCode::DimensionMismatch, "state length " + std::to_string(psi.size()) +
                                           " differs from stratified vertex count " +
                                           std::to_string(s.distance.size()));
  cvec q(s.depth(), 0.0);
  for (std::size_t k = 0; k < s.depth(); ++k) {
    std::complex<double> acc = 0.0;
    for (Vertex v : s.strata[k]) acc += psi[v];
    q[k] = acc / std::sqrt(static_cast<double>(s.strata[k].size()));
  }
  return q;
}

}  // namespace ctqw
