#include "copangle/finite_diff.hpp"

#include <cmath>

namespace copangle {

namespace {

double probe(const std::function<double(std::span<const double>)>& f,
             std::span<const double> x) {
  double value;
  try {
    value = f(x);
  } catch (const std::exception& e) {
    throw DomainError(std::string("function undefined at stencil point: ") +
                      e.what());
  }
  if (!std::isfinite(value)) {
    throw DomainError("function non-finite at stencil point");
  }
  return value;
}

}  // namespace

FdDerivatives fd_derivatives(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> point, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  const int k = static_cast<int>(point.size());
  std::vector<double> x(point.begin(), point.end());

  FdDerivatives out{std::vector<double>(k), SymMatrix(k)};
  const double center = probe(f, x);

  for (int i = 0; i < k; ++i) {
    x[i] = point[i] + step;
    const double up = probe(f, x);
    x[i] = point[i] - step;
    const double down = probe(f, x);
    x[i] = point[i];
    out.gradient[i] = (up - down) / (2.0 * step);
    out.hessian(i, i) = (up - 2.0 * center + down) / (step * step);
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      x[i] = point[i] + step;
      x[j] = point[j] + step;
      const double pp = probe(f, x);
      x[j] = point[j] - step;
      const double pm = probe(f, x);
      x[i] = point[i] - step;
      x[j] = point[j] + step;
      const double mp = probe(f, x);
      x[j] = point[j] - step;
      const double mm = probe(f, x);
      x[i] = point[i];
      x[j] = point[j];
      // the cross stencil is already symmetric in (i,j); storing it once is
      // the (H + H^T)/2 symmetrization
      out.hessian(i, j) = (pp - pm - mp + mm) / (4.0 * step * step);
    }
  }
  return out;
}

}  // namespace copangle
