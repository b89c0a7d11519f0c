#pragma once

#include <vector>

namespace ctqw {

/// Eigenvalues (ascending) and first components of the matching normalized
/// eigenvectors of a real symmetric tridiagonal matrix.
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> first;
};

/// Implicit QL with Wilkinson shifts. `diag` has n entries, `offdiag` n−1.
/// Only the first eigenvector row is accumulated, so the cost is O(n²).
/// Throws EigenSolverFailure when an eigenvalue does not converge.
TridiagonalEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace ctqw
