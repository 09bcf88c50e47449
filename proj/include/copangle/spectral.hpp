#ifndef COPANGLE_SPECTRAL_HPP
#define COPANGLE_SPECTRAL_HPP

#include <vector>

#include "copangle/sym_matrix.hpp"

namespace copangle {

/// Full symmetric eigendecomposition A = sum_k lambda_k v_k v_k^T.
struct Spectrum {
  std::vector<double> eigenvalues;               ///< ascending
  std::vector<std::vector<double>> eigenvectors; ///< orthonormal, eigenvectors[k] pairs with eigenvalues[k]

  SymMatrix reconstruct() const;
  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_eigenvalue() const { return eigenvalues.back(); }
};

/// Cyclic Jacobi rotations; throws ConvergenceFailure past the sweep cap.
Spectrum eigendecompose(const SymMatrix& a);

/// Projection onto the positive semidefinite cone: negative eigenvalues
/// clipped to zero. Idempotent; the residual is orthogonal to the result.
SymMatrix psd_project(const SymMatrix& a);

/// Smallest eigenvalue (convenience wrapper).
double min_eigenvalue(const SymMatrix& a);

}  // namespace copangle

#endif  // COPANGLE_SPECTRAL_HPP
