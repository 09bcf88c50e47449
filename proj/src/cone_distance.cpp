#include "copangle/cone_distance.hpp"

#include <cmath>

#include "copangle/spectral.hpp"

namespace copangle {

ConeDecomposition dist_to_copositive(const SymMatrix& a, double tol,
                                     int max_iter, bool record_trace) {
  const int n = a.order();
  if (n > 4) {
    throw UnsupportedOrder(
        "P+N decomposition equals the copositive cone only for orders <= 4");
  }
  if (tol <= 0.0) throw DomainError("tolerance must be positive");

  ConeDecomposition out{0.0, SymMatrix(n), SymMatrix(n), 0, true, {}};

  if (entrywise_nonnegative(a)) {
    out.nonneg_part = a;
    return out;
  }

  auto objective = [&](const SymMatrix& p, const SymMatrix& nn) {
    const SymMatrix r = a - p - nn;
    return inner_product(r, r);
  };

  SymMatrix p = psd_project(a);
  SymMatrix nn = positive_part(a - p);
  double obj = objective(p, nn);
  if (record_trace) out.objective_trace.push_back(obj);

  const double stop = tol * tol;
  out.converged = false;
  int it = 0;
  for (; it < max_iter; ++it) {
    nn = positive_part(a - p);
    p = psd_project(a - nn);
    const double next = objective(p, nn);
    if (record_trace) out.objective_trace.push_back(next);
    const double decrease = obj - next;
    obj = next;
    if (decrease < stop) {
      out.converged = true;
      ++it;
      break;
    }
  }

  out.distance = std::sqrt(std::max(obj, 0.0));
  out.psd_part = std::move(p);
  out.nonneg_part = std::move(nn);
  out.iterations = it;
  return out;
}

}  // namespace copangle
