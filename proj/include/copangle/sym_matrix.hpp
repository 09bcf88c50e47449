#ifndef COPANGLE_SYM_MATRIX_HPP
#define COPANGLE_SYM_MATRIX_HPP

#include <span>
#include <vector>

#include "copangle/errors.hpp"

namespace copangle {

/// Dense real symmetric matrix with upper-triangle storage.
///
/// Entry (i,j) and (j,i) share a single storage cell, so symmetry holds by
/// construction. The inner product is the trace pairing <A,B> = Tr(AB),
/// which on the stored triangle reads sum a_ii b_ii + 2 sum_{i<j} a_ij b_ij.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  static SymMatrix identity(int order);
  /// Builds from the row-major upper triangle (n(n+1)/2 finite values).
  static SymMatrix from_upper(int order, std::vector<double> upper);
  /// Builds from full rows; requires exact symmetry and finite entries.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return order_; }

  double operator()(int i, int j) const { return upper_[cell(i, j)]; }
  double& operator()(int i, int j) { return upper_[cell(i, j)]; }

  std::span<const double> upper() const { return upper_; }
  std::vector<std::vector<double>> rows() const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  SymMatrix& operator*=(double factor);

 private:
  std::size_t cell(int i, int j) const;

  int order_;
  std::vector<double> upper_;
};

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs);
SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs);
SymMatrix operator-(const SymMatrix& m);
SymMatrix operator*(double factor, SymMatrix m);

/// Trace pairing <A,B> = Tr(AB). Throws OrderMismatch.
double inner_product(const SymMatrix& a, const SymMatrix& b);

/// Frobenius norm sqrt(<A,A>).
double norm(const SymMatrix& a);

/// arccos of the normalized inner product, clamped to [-1,1]; in [0, pi].
/// Throws ZeroMatrix if either argument has zero norm.
double angle_between(const SymMatrix& a, const SymMatrix& b);

/// m / ||m||. Throws ZeroMatrix when ||m|| vanishes.
SymMatrix normalized(const SymMatrix& m);

/// Entrywise max(m, 0).
SymMatrix positive_part(const SymMatrix& m);

/// x^T A x for a vector of matching length.
double quadratic_form(const SymMatrix& a, std::span<const double> x);

/// Largest |a_ij - b_ij| over all cells.
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// Matrix with entry (i,j) = m(perm[i], perm[j]); perm must be a permutation
/// of {0,...,n-1}.
SymMatrix permuted(const SymMatrix& m, std::span<const int> perm);

bool entrywise_nonnegative(const SymMatrix& m, double tol = 0.0);

}  // namespace copangle

#endif  // COPANGLE_SYM_MATRIX_HPP
