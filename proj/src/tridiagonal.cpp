#include "ctqw/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ctqw/error.hpp"

namespace ctqw {

namespace {

// √(a²+b²) without overflow; cheaper than std::hypot in the inner loop
inline double pythag(double a, double b) {
  const double x = std::abs(a), y = std::abs(b);
  if (x > y) return x * std::sqrt(1.0 + (y / x) * (y / x));
  return y == 0.0 ? 0.0 : y * std::sqrt(1.0 + (x / y) * (x / y));
}

}  // namespace

TridiagonalEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> offdiag) {
  const std::size_t n = d.size();
  if (n == 0) fail(ErrorCode::DimensionMismatch, "empty tridiagonal matrix");
  if (offdiag.size() + 1 != n)
    fail(ErrorCode::DimensionMismatch, "off-diagonal must have n-1 entries");

  // e[i] couples rows i and i+1; e[n-1] is scratch.
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  std::vector<double> z(n, 0.0);  // first row of the eigenvector matrix
  z[0] = 1.0;

  constexpr int max_iter = 60;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > max_iter)
        fail(ErrorCode::EigenSolverFailure,
             "QL iteration did not converge for eigenvalue " + std::to_string(l));

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = pythag(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = pythag(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  out.first.reserve(n);
  for (auto i : order) {
    out.values.push_back(d[i]);
    out.first.push_back(z[i]);
  }
  return out;
}

}  // namespace ctqw
