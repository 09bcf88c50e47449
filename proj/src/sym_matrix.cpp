#include "copangle/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace copangle {

namespace {

std::size_t triangle_size(int order) {
  return static_cast<std::size_t>(order) * (order + 1) / 2;
}

void require_same_order(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("matrix orders differ: " + std::to_string(a.order()) +
                        " vs " + std::to_string(b.order()));
  }
}

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("matrix entries must be finite");
  }
}

}  // namespace

SymMatrix::SymMatrix(int order) : order_(order) {
  if (order < 1) throw DomainError("matrix order must be >= 1");
  upper_.assign(triangle_size(order), 0.0);
}

SymMatrix SymMatrix::identity(int order) {
  SymMatrix m(order);
  for (int i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

SymMatrix SymMatrix::from_upper(int order, std::vector<double> upper) {
  if (order < 1) throw DomainError("matrix order must be >= 1");
  if (upper.size() != triangle_size(order)) {
    throw DomainError("upper triangle must hold n(n+1)/2 entries");
  }
  require_finite(upper);
  SymMatrix m(order);
  m.upper_ = std::move(upper);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw DomainError("matrix order must be >= 1");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("rows must form a square matrix");
    }
    require_finite(row);
  }
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw DomainError("rows are not exactly symmetric");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<std::vector<double>> SymMatrix::rows() const {
  std::vector<std::vector<double>> out(order_, std::vector<double>(order_));
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

std::size_t SymMatrix::cell(int i, int j) const {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * order_ -
         static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += other.upper_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] -= other.upper_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double factor) {
  for (double& v : upper_) v *= factor;
  return *this;
}

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
SymMatrix operator-(const SymMatrix& m) {
  SymMatrix out = m;
  out *= -1.0;
  return out;
}
SymMatrix operator*(double factor, SymMatrix m) { return m *= factor; }

double inner_product(const SymMatrix& a, const SymMatrix& b) {
  require_same_order(a, b);
  const int n = a.order();
  double diag = 0.0;
  double off = 0.0;
  for (int i = 0; i < n; ++i) {
    diag += a(i, i) * b(i, i);
    for (int j = i + 1; j < n; ++j) off += a(i, j) * b(i, j);
  }
  return diag + 2.0 * off;
}

double norm(const SymMatrix& a) { return std::sqrt(inner_product(a, a)); }

double angle_between(const SymMatrix& a, const SymMatrix& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw ZeroMatrix("angle_between requires nonzero matrices");
  }
  // Rounding can push the normalized product just past +-1.
  const double c = std::clamp(inner_product(a, b) / (na * nb), -1.0, 1.0);
  return std::acos(c);
}

SymMatrix normalized(const SymMatrix& m) {
  const double n = norm(m);
  if (n == 0.0) throw ZeroMatrix("cannot normalize the zero matrix");
  SymMatrix out = m;
  out *= 1.0 / n;
  return out;
}

SymMatrix positive_part(const SymMatrix& m) {
  const int n = m.order();
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) out(i, j) = std::max(m(i, j), 0.0);
  }
  return out;
}

double quadratic_form(const SymMatrix& a, std::span<const double> x) {
  const int n = a.order();
  if (static_cast<int>(x.size()) != n) {
    throw OrderMismatch("vector length does not match matrix order");
  }
  double diag = 0.0;
  double off = 0.0;
  for (int i = 0; i < n; ++i) {
    diag += a(i, i) * x[i] * x[i];
    for (int j = i + 1; j < n; ++j) off += a(i, j) * x[i] * x[j];
  }
  return diag + 2.0 * off;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  require_same_order(a, b);
  double worst = 0.0;
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

SymMatrix permuted(const SymMatrix& m, std::span<const int> perm) {
  const int n = m.order();
  if (static_cast<int>(perm.size()) != n) {
    throw OrderMismatch("permutation length does not match matrix order");
  }
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
  }
  return out;
}

bool entrywise_nonnegative(const SymMatrix& m, double tol) {
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (m(i, j) < -tol) return false;
    }
  }
  return true;
}

}  // namespace copangle
