#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ctqw {

/// Constant coefficients the sequence settles to (ω_k → omega, α_k → alpha).
/// Used to terminate continued fractions with their exact periodic tail.
struct AsymptoticTail {
  double omega = 1.0;
  double alpha = 0.0;
};

/// Szegő–Jacobi sequences {ω_k}, {α_k} (both 1-based) plus the Hamiltonian
/// scale γ, i.e. H = γ·A. A finite sequence with L levels has ω_1..ω_{L−1}
/// and α_1..α_L; lookups past the end return 0.
class JacobiSeq {
 public:
  using Generator = std::function<double(std::size_t)>;

  static JacobiSeq finite(std::vector<double> omega, std::vector<double> alpha,
                          double scale = 1.0);
  static JacobiSeq unbounded(Generator omega, Generator alpha, double scale = 1.0,
                             std::optional<AsymptoticTail> tail = std::nullopt);

  double omega(std::size_t k) const;
  double alpha(std::size_t k) const;

  /// Number of strata (Jacobi matrix size); empty when unbounded.
  std::optional<std::size_t> levels() const noexcept { return levels_; }
  bool is_finite() const noexcept { return levels_.has_value(); }
  double scale() const noexcept { return scale_; }
  const std::optional<AsymptoticTail>& tail() const noexcept { return tail_; }

  JacobiSeq with_scale(double scale) const;

  /// First `levels` strata as a finite sequence (levels ≤ this->levels()).
  JacobiSeq truncated(std::size_t levels) const;

  /// ω_1..ω_count and α_1..α_count.
  std::vector<double> omegas(std::size_t count) const;
  std::vector<double> alphas(std::size_t count) const;

  /// Entrywise comparison over the first `count` levels (ω and α) and scale.
  bool approx_equal(const JacobiSeq& other, std::size_t count, double tol) const;

 private:
  JacobiSeq() = default;

  std::optional<std::size_t> levels_;
  std::vector<double> omega_;  // finite storage, index k-1
  std::vector<double> alpha_;
  Generator omega_fn_;
  Generator alpha_fn_;
  double scale_ = 1.0;
  std::optional<AsymptoticTail> tail_;
};

}  // namespace ctqw
