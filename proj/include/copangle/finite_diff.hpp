#ifndef COPANGLE_FINITE_DIFF_HPP
#define COPANGLE_FINITE_DIFF_HPP

#include <functional>
#include <span>
#include <vector>

#include "copangle/sym_matrix.hpp"

namespace copangle {

struct FdDerivatives {
  std::vector<double> gradient;
  SymMatrix hessian;  ///< central differences, symmetrized as (H + H^T)/2
};

/// Central finite differences for the gradient and Hessian of f at the
/// given point. Throws DomainError when f is undefined (non-finite or
/// throwing) at a stencil point.
FdDerivatives fd_derivatives(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> point, double step);

}  // namespace copangle

#endif  // COPANGLE_FINITE_DIFF_HPP
