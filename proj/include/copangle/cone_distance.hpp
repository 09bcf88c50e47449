#ifndef COPANGLE_CONE_DISTANCE_HPP
#define COPANGLE_CONE_DISTANCE_HPP

#include <vector>

#include "copangle/sym_matrix.hpp"

namespace copangle {

/// Result of projecting onto the cone of PSD-plus-nonnegative matrices,
/// which equals the copositive cone for orders <= 4. The projection itself
/// is psd_part + nonneg_part; distance = ||A - psd_part - nonneg_part||.
struct ConeDecomposition {
  double distance = 0.0;
  SymMatrix psd_part;
  SymMatrix nonneg_part;
  int iterations = 0;
  bool converged = false;  ///< decrease fell below tol^2 before max_iter
  std::vector<double> objective_trace;  ///< filled only when requested
};

/// Block-coordinate descent on min ||A - P - N||^2 over PSD P and
/// entrywise-nonnegative N, starting from P = psd_project(A),
/// N = max(A - P, 0). Each block step is an exact minimizer, so the
/// objective is nonincreasing; iteration stops when the decrease falls
/// below tol^2 or max_iter is reached. Distance is zero (up to tol)
/// exactly when A is copositive.
///
/// Throws UnsupportedOrder for order >= 5 (where the cone identity fails);
/// ConvergenceFailure propagates from the eigensolver.
ConeDecomposition dist_to_copositive(const SymMatrix& a, double tol = 1e-12,
                                     int max_iter = 100000,
                                     bool record_trace = false);

}  // namespace copangle

#endif  // COPANGLE_CONE_DISTANCE_HPP
