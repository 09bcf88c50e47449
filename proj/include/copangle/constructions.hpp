#ifndef COPANGLE_CONSTRUCTIONS_HPP
#define COPANGLE_CONSTRUCTIONS_HPP

#include <utility>

#include "copangle/sym_matrix.hpp"

namespace copangle {

/// A pair of unit-norm matrices with its inner product and angle.
struct AnglePair {
  SymMatrix a;
  SymMatrix b;
  double inner = 0.0;
  double angle = 0.0;  ///< radians
};

/// Fills inner and angle from the matrices; members must already be unit
/// norm (within 1e-9).
AnglePair make_angle_pair(SymMatrix a, SymMatrix b);

/// The one-parameter family of order-3 copositive pairs with inner product
/// -sqrt(2)/2: A is rank one with first row (1/2, -sqrt(a22/2),
/// -sqrt(a33/2)) and B is the nonnegative matrix supported on row one,
/// where a33 = 1/2 - a22. Domain: 0 <= a22 <= 1/2.
AnglePair antipodal_family_pair(double a22);

/// The classic extreme pair: the order-2 maximal-angle pair padded with a
/// zero row and column (the a22 = 0 endpoint of the family, up to
/// permutation).
AnglePair canonical_antipodal_pair();

/// Witness direction and spectral lower bound for a matrix whose three
/// off-diagonal entries are all strictly negative.
struct Pair30Bound {
  SymMatrix witness;         ///< normalized nonnegative matrix carried by -offdiag(A)
  double lower_bound = 0.0;  ///< -sqrt(sum of squared negative eigenvalues) of the witness
};

/// Builds the witness B_A = -offdiag(A)/||offdiag(A)|| (zero diagonal) and
/// the eigenvalue lower bound on <A,B> over unit nonnegative B. The bound
/// is strictly above -1/sqrt(2): the witness has one positive and two
/// negative eigenvalues summing to zero. Throws SignPatternError when some
/// off-diagonal entry is nonnegative.
Pair30Bound pair30_bound(const SymMatrix& a);

/// Family of copositive matrices with all-negative off-diagonals whose
/// angle against the fixed nonnegative witness tends to the maximal angle
/// as eps tends to 0. Both members are returned normalized. Domain:
/// 0 <= eps < 1/3.
AnglePair pair30_limit_family(double eps);

/// The unique unit-norm matrix with two negative off-diagonal entries
/// that attains the spectral bound: rank one, a11 = 1/2, a22 = 2 a12^2,
/// a33 = 2 a13^2, a23 = 2 a12 a13. Requires a12 < 0, a13 < 0 and
/// 2 sqrt(a12^2 + a13^2) = 1 within 1e-9.
SymMatrix pair20_critical_matrix(double a12, double a13);

/// Inner-product objective for pairs in which each matrix has exactly one
/// negative entry above the diagonal, after the optimal-structure
/// reductions (a33 = a23 = b22 = b23 = 0, a12 = -sqrt(a11 a22),
/// b13 = -sqrt(b11 b33)) and the unit-norm eliminations:
///   a11 b11 - sqrt(2 a11 a22) sqrt(1 - (b11+b33)^2)
///           - sqrt(2 b11 b33) sqrt(1 - (a11+a22)^2).
/// Domain: all arguments >= 0, a11 + a22 <= 1, b11 + b33 <= 1.
double pair11_objective(double a11, double a22, double b11, double b33);

/// Closed-form stationary point of pair11_objective.
struct Pair11Critical {
  double a11 = 0.0, a22 = 0.0, a12 = 0.0, a13 = 0.0;
  double b11 = 0.0, b33 = 0.0, b13 = 0.0, b12 = 0.0;
};

/// The unique stationary point of the one-negative-each objective:
/// a11 = b11 = sqrt((7 sqrt5 - 15)/10), a22 = b33 = sqrt((3 sqrt5 - 5)/10),
/// a12 = b13 = -sqrt((5 - 2 sqrt5)/5), a13 = b12 = sqrt((sqrt5-1)/(2 sqrt5)).
/// The assembled pair has inner product (1 - sqrt5)/2; it is a saddle of
/// the objective, not a maximal-angle pair.
std::pair<Pair11Critical, AnglePair> pair11_critical_pair();

/// First-order analysis for a matrix with two negative entries against its
/// best-response matrix with one negative entry.
struct Pair21Analysis {
  double x = 0.0;           ///< sqrt(b33/b22) at the inner critical point
  SymMatrix best_response;  ///< the unit-norm critical B (b11 = 0, b23 = -sqrt(b22 b33))
  double f = 0.0;           ///< <A, best_response> = -sqrt(h/2)
  double g = 0.0;           ///< surrogate objective; g + h = 2 ||A||^2
  double h = 0.0;           ///< 2 f^2
};

/// Requires unit-norm A with positive diagonal, -sqrt(a11 a22) <= a12 < 0,
/// -sqrt(a11 a33) <= a13 < 0 and a23 > sqrt(a22 a33) (each inequality
/// checked at tolerance 1e-10). Evaluates the closed-form best response and
/// the f/g/h identities; f stays strictly above -1/sqrt(2) on this set.
Pair21Analysis pair21_analysis(const SymMatrix& a);

}  // namespace copangle

#endif  // COPANGLE_CONSTRUCTIONS_HPP
