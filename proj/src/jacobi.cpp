#include "ctqw/jacobi.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ctqw/error.hpp"

namespace ctqw {

JacobiSeq JacobiSeq::finite(std::vector<double> omega, std::vector<double> alpha,
                            double scale) {
  if (alpha.empty()) fail(ErrorCode::ParameterOutOfDomain, "JacobiSeq needs at least one level");
  if (omega.size() + 1 != alpha.size())
    fail(ErrorCode::ParameterOutOfDomain,
         "finite JacobiSeq needs |alpha| = |omega| + 1, got " + std::to_string(alpha.size()) +
             " and " + std::to_string(omega.size()));
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (!(omega[i] > 0.0) || !std::isfinite(omega[i]))
      fail(ErrorCode::ParameterOutOfDomain,
           "omega_" + std::to_string(i + 1) + " must be positive, got " + std::to_string(omega[i]));
  if (!(scale > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "scale must be positive");
  JacobiSeq j;
  j.levels_ = alpha.size();
  j.omega_ = std::move(omega);
  j.alpha_ = std::move(alpha);
  j.scale_ = scale;
  return j;
}

JacobiSeq JacobiSeq::unbounded(Generator omega, Generator alpha, double scale,
                               std::optional<AsymptoticTail> tail) {
  if (!omega || !alpha) fail(ErrorCode::ParameterOutOfDomain, "JacobiSeq generators must be set");
  if (!(scale > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "scale must be positive");
  JacobiSeq j;
  j.omega_fn_ = std::move(omega);
  j.alpha_fn_ = std::move(alpha);
  j.scale_ = scale;
  j.tail_ = tail;
  return j;
}

double JacobiSeq::omega(std::size_t k) const {
  if (k == 0) return 0.0;
  if (levels_) return k < *levels_ ? omega_[k - 1] : 0.0;
  return omega_fn_(k);
}

double JacobiSeq::alpha(std::size_t k) const {
  if (k == 0) return 0.0;
  if (levels_) return k <= *levels_ ? alpha_[k - 1] : 0.0;
  return alpha_fn_(k);
}

JacobiSeq JacobiSeq::with_scale(double scale) const {
  if (!(scale > 0.0)) fail(ErrorCode::ParameterOutOfDomain, "scale must be positive");
  JacobiSeq j = *this;
  j.scale_ = scale;
  return j;
}

JacobiSeq JacobiSeq::truncated(std::size_t levels) const {
  if (levels == 0) fail(ErrorCode::TruncationTooLarge, "truncation needs at least one level");
  if (levels_ && levels > *levels_)
    fail(ErrorCode::TruncationTooLarge, "requested " + std::to_string(levels) +
                                            " levels from a sequence with " +
                                            std::to_string(*levels_));
  return finite(omegas(levels - 1), alphas(levels), scale_);
}

std::vector<double> JacobiSeq::omegas(std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t k = 1; k <= count; ++k) out[k - 1] = omega(k);
  return out;
}

std::vector<double> JacobiSeq::alphas(std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t k = 1; k <= count; ++k) out[k - 1] = alpha(k);
  return out;
}

bool JacobiSeq::approx_equal(const JacobiSeq& other, std::size_t count, double tol) const {
  if (std::abs(scale_ - other.scale_) > tol) return false;
  for (std::size_t k = 1; k <= count; ++k) {
    if (std::abs(omega(k) - other.omega(k)) > tol) return false;
    if (std::abs(alpha(k) - other.alpha(k)) > tol) return false;
  }
  return true;
}

}  // namespace ctqw
