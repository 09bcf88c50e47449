#include "copangle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace copangle {

namespace {

constexpr int kMaxSweeps = 10000;

double offdiag_sq(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  }
  return s;
}

}  // namespace

SymMatrix Spectrum::reconstruct() const {
  const int n = static_cast<int>(eigenvalues.size());
  SymMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = eigenvalues[k];
    const auto& v = eigenvectors[k];
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) out(i, j) += lambda * v[i] * v[j];
    }
  }
  return out;
}

Spectrum eigendecompose(const SymMatrix& m) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }

  double scale = 0.0;
  for (double x : a) scale += x * x;
  // off-diagonal mass below this is indistinguishable from rounding noise
  const double stop = 1e-30 * std::max(scale, 1e-300);

  bool converged = (n == 1) || offdiag_sq(a, n) <= stop;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = aip - s * (aiq + tau * aip);
          a[p * n + i] = a[i * n + p];
          a[i * n + q] = aiq + s * (aip - tau * aiq);
          a[q * n + i] = a[i * n + q];
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v[i * n + p];
          const double viq = v[i * n + q];
          v[i * n + p] = vip - s * (viq + tau * vip);
          v[i * n + q] = viq + s * (vip - tau * viq);
        }
      }
    }
    converged = offdiag_sq(a, n) <= stop;
  }
  if (!converged) {
    throw ConvergenceFailure("Jacobi eigensolver exceeded the sweep cap");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    const int col = order[k];
    s.eigenvalues[k] = a[col * n + col];
    for (int i = 0; i < n; ++i) s.eigenvectors[k][i] = v[i * n + col];
  }
  return s;
}

SymMatrix psd_project(const SymMatrix& a) {
  const Spectrum s = eigendecompose(a);
  const int n = a.order();
  SymMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = s.eigenvalues[k];
    if (lambda <= 0.0) continue;
    const auto& v = s.eigenvectors[k];
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) out(i, j) += lambda * v[i] * v[j];
    }
  }
  return out;
}

double min_eigenvalue(const SymMatrix& a) {
  return eigendecompose(a).min_eigenvalue();
}

}  // namespace copangle
