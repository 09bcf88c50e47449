#include "copangle/constructions.hpp"

#include <cmath>

#include "copangle/spectral.hpp"

namespace copangle {

namespace {

constexpr double kUnitNormTol = 1e-9;
constexpr double kStrictTol = 1e-10;

}  // namespace

AnglePair make_angle_pair(SymMatrix a, SymMatrix b) {
  if (std::abs(norm(a) - 1.0) > kUnitNormTol ||
      std::abs(norm(b) - 1.0) > kUnitNormTol) {
    throw DomainError("angle pair members must be unit norm");
  }
  AnglePair pair{std::move(a), std::move(b), 0.0, 0.0};
  pair.inner = inner_product(pair.a, pair.b);
  pair.angle = angle_between(pair.a, pair.b);
  return pair;
}

AnglePair antipodal_family_pair(double a22) {
  if (!(a22 >= 0.0 && a22 <= 0.5)) {
    throw DomainError("family parameter a22 must lie in [0, 1/2]");
  }
  const double a33 = 0.5 - a22;
  SymMatrix a(3);
  a(0, 0) = 0.5;
  a(0, 1) = -std::sqrt(a22 / 2.0);
  a(0, 2) = -std::sqrt(a33 / 2.0);
  a(1, 1) = a22;
  a(1, 2) = std::sqrt(a22 * a33);
  a(2, 2) = a33;

  SymMatrix b(3);
  b(0, 1) = std::sqrt(a22);
  b(0, 2) = std::sqrt(a33);
  return make_angle_pair(std::move(a), std::move(b));
}

AnglePair canonical_antipodal_pair() {
  SymMatrix a(3);
  a(0, 0) = 0.5;
  a(1, 1) = 0.5;
  a(0, 1) = -0.5;
  SymMatrix b(3);
  b(0, 1) = std::sqrt(2.0) / 2.0;
  return make_angle_pair(std::move(a), std::move(b));
}

Pair30Bound pair30_bound(const SymMatrix& a) {
  if (a.order() != 3) throw OrderMismatch("pair30_bound requires order 3");
  const double a12 = a(0, 1), a13 = a(0, 2), a23 = a(1, 2);
  if (!(a12 < 0.0 && a13 < 0.0 && a23 < 0.0)) {
    throw SignPatternError("all off-diagonal entries must be negative");
  }
  const double scale =
      1.0 / std::sqrt(2.0 * (a12 * a12 + a13 * a13 + a23 * a23));
  SymMatrix witness(3);
  witness(0, 1) = -a12 * scale;
  witness(0, 2) = -a13 * scale;
  witness(1, 2) = -a23 * scale;

  const Spectrum s = eigendecompose(witness);
  double total = 0.0;
  double negative = 0.0;
  for (double lambda : s.eigenvalues) {
    total += lambda * lambda;
    if (lambda < 0.0) negative += lambda * lambda;
  }
  Pair30Bound out{std::move(witness), -std::sqrt(negative / total)};
  if (!(out.lower_bound > -1.0 / std::sqrt(2.0))) {
    throw DomainError("spectral bound postcondition violated");
  }
  return out;
}

AnglePair pair30_limit_family(double eps) {
  if (!(eps >= 0.0 && eps < 1.0 / 3.0)) {
    throw DomainError("eps must lie in [0, 1/3)");
  }
  SymMatrix a(3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(2, 2) = eps;
  a(0, 1) = -1.0 + 3.0 * eps;
  a(0, 2) = -eps;
  a(1, 2) = -eps;
  SymMatrix b(3);
  b(0, 1) = std::sqrt(2.0) / 2.0;
  return make_angle_pair(normalized(a), std::move(b));
}

SymMatrix pair20_critical_matrix(double a12, double a13) {
  if (!(a12 < 0.0) || !(a13 < 0.0)) {
    throw DomainError("both off-diagonal parameters must be negative");
  }
  if (std::abs(2.0 * std::sqrt(a12 * a12 + a13 * a13) - 1.0) > 1e-9) {
    throw DomainError("parameters must satisfy 2 sqrt(a12^2 + a13^2) = 1");
  }
  SymMatrix a(3);
  a(0, 0) = 0.5;
  a(0, 1) = a12;
  a(0, 2) = a13;
  a(1, 1) = 2.0 * a12 * a12;
  a(2, 2) = 2.0 * a13 * a13;
  a(1, 2) = 2.0 * a12 * a13;
  return a;
}

double pair11_objective(double a11, double a22, double b11, double b33) {
  if (a11 < 0.0 || a22 < 0.0 || b11 < 0.0 || b33 < 0.0) {
    throw DomainError("objective arguments must be nonnegative");
  }
  const double sa = a11 + a22;
  const double sb = b11 + b33;
  if (sa > 1.0 || sb > 1.0) {
    throw DomainError("objective arguments must satisfy a11+a22 <= 1 and b11+b33 <= 1");
  }
  return a11 * b11 -
         std::sqrt(2.0 * a11 * a22) * std::sqrt(1.0 - sb * sb) -
         std::sqrt(2.0 * b11 * b33) * std::sqrt(1.0 - sa * sa);
}

std::pair<Pair11Critical, AnglePair> pair11_critical_pair() {
  const double s5 = std::sqrt(5.0);
  Pair11Critical c;
  c.a11 = std::sqrt((7.0 * s5 - 15.0) / 10.0);
  c.a22 = std::sqrt((3.0 * s5 - 5.0) / 10.0);
  c.a12 = -std::sqrt((5.0 - 2.0 * s5) / 5.0);
  c.a13 = std::sqrt((s5 - 1.0) / (2.0 * s5));
  c.b11 = c.a11;
  c.b33 = c.a22;
  c.b13 = c.a12;
  c.b12 = c.a13;

  SymMatrix a(3);
  a(0, 0) = c.a11;
  a(1, 1) = c.a22;
  a(0, 1) = c.a12;
  a(0, 2) = c.a13;

  SymMatrix b(3);
  b(0, 0) = c.b11;
  b(2, 2) = c.b33;
  b(0, 1) = c.b12;
  b(0, 2) = c.b13;

  return {c, make_angle_pair(std::move(a), std::move(b))};
}

Pair21Analysis pair21_analysis(const SymMatrix& a) {
  if (a.order() != 3) throw OrderMismatch("pair21_analysis requires order 3");
  if (std::abs(norm(a) - 1.0) > kUnitNormTol) {
    throw DomainError("input must be unit norm");
  }
  const double a11 = a(0, 0), a22 = a(1, 1), a33 = a(2, 2);
  const double a12 = a(0, 1), a13 = a(0, 2), a23 = a(1, 2);
  if (!(a11 > kStrictTol && a22 > kStrictTol && a33 > kStrictTol)) {
    throw DomainError("diagonal entries must be strictly positive");
  }
  if (!(a12 < -kStrictTol) || a12 < -std::sqrt(a11 * a22) - kStrictTol) {
    throw DomainError("a12 must lie in [-sqrt(a11 a22), 0)");
  }
  if (!(a13 < -kStrictTol) || a13 < -std::sqrt(a11 * a33) - kStrictTol) {
    throw DomainError("a13 must lie in [-sqrt(a11 a33), 0)");
  }
  if (!(a23 > std::sqrt(a22 * a33) + kStrictTol)) {
    throw DomainError("a23 must exceed sqrt(a22 a33)");
  }

  Pair21Analysis out{0.0, SymMatrix(3), 0.0, 0.0, 0.0};
  const double spread = std::sqrt((a33 - a22) * (a33 - a22) + 4.0 * a23 * a23);
  out.x = (a22 - a33 + spread) / (2.0 * a23);

  const double a22_shift = a22 - a23 * out.x;  // strictly negative on this set
  const double b12 = -a12 / std::sqrt(a22_shift * a22_shift +
                                      2.0 * a12 * a12 + 2.0 * a13 * a13);
  const double b13 = b12 * a13 / a12;
  const double b22 = b12 * a22_shift / (a12 * (1.0 + out.x * out.x));
  const double b33 = b22 * out.x * out.x;
  out.best_response(0, 1) = b12;
  out.best_response(0, 2) = b13;
  out.best_response(1, 1) = b22;
  out.best_response(2, 2) = b33;
  out.best_response(1, 2) = -std::sqrt(b22 * b33);

  out.g = 2.0 * a11 * a11 + a22 * a22 + a33 * a33 + 2.0 * a23 * a23 +
          (a22 + a33) * spread;
  out.h = a22 * a22 + a33 * a33 + 4.0 * a12 * a12 + 4.0 * a13 * a13 +
          2.0 * a23 * a23 - (a22 + a33) * spread;
  out.f = -std::sqrt(out.h / 2.0);

  if (std::abs(out.f - inner_product(a, out.best_response)) > 1e-9) {
    throw DomainError("best-response inner product does not match f");
  }
  if (!(out.f > -1.0 / std::sqrt(2.0))) {
    throw DomainError("f postcondition violated");
  }
  return out;
}

}  // namespace copangle
