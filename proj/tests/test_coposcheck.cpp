#include <doctest.h>

#include <cmath>

#include "copangle/cone_distance.hpp"
#include "copangle/constructions.hpp"
#include "copangle/copositivity.hpp"
#include "copangle/random.hpp"
#include "copangle/simplex_oracle.hpp"

using namespace copangle;

namespace {

SymMatrix sym3(double a11, double a22, double a33, double a12, double a13,
               double a23) {
  SymMatrix m(3);
  m(0, 0) = a11;
  m(1, 1) = a22;
  m(2, 2) = a33;
  m(0, 1) = a12;
  m(0, 2) = a13;
  m(1, 2) = a23;
  return m;
}

// order-3 matrix whose case is [[1,-1,-1],[-1,1,0],[-1,0,1]]
SymMatrix two_negative_nonmember() {
  return sym3(1.0, 1.0, 1.0, -1.0, -1.0, 0.0);
}

// diag |g|, off-diagonal gaussians at a mixed scale, so every sign case
// shows up with useful frequency
SymMatrix sample_sign_mixed(GaussianSampler& g) {
  const double off_scale = 0.2 + 1.8 * g.uniform01();
  SymMatrix a(3);
  for (int i = 0; i < 3; ++i) a(i, i) = std::abs(g.normal());
  a(0, 1) = g.normal() * off_scale;
  a(0, 2) = g.normal() * off_scale;
  a(1, 2) = g.normal() * off_scale;
  return a;
}

bool witness_on_simplex(const Witness& w) {
  double sum = 0.0;
  for (double x : w.point) {
    if (x < -1e-12) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= 1e-9;
}

}  // namespace

TEST_SUITE("coposcheck") {

TEST_CASE("classify_signs") {
  CHECK(classify_signs(SymMatrix::identity(3)).negatives_above_diagonal == 0);
  const double r8 = -std::sqrt(0.125);
  CHECK(classify_signs(sym3(0.5, 0.25, 0.25, r8, r8, 0.25))
            .negatives_above_diagonal == 2);
  CHECK(classify_signs(sym3(1, 1, 1, -1, -1, -1)).negatives_above_diagonal ==
        3);
  CHECK_THROWS_AS(classify_signs(SymMatrix(2)), OrderMismatch);
}

TEST_CASE("scaled_params on the boundary family matrix") {
  const double r8 = -std::sqrt(0.125);
  const ScaledParams sp = scaled_params(sym3(0.5, 0.25, 0.25, r8, r8, 0.25));
  CHECK(sp.alpha == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sp.beta == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sp.gamma == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("scaled_params identity and rank-one cases") {
  const ScaledParams id = scaled_params(SymMatrix::identity(3));
  CHECK(id.alpha == 0.0);
  CHECK(id.beta == 0.0);
  CHECK(id.gamma == 0.0);
  const ScaledParams ones = scaled_params(sym3(1, 4, 9, 2, 3, 6));
  CHECK(ones.alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ones.beta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ones.gamma == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ones.alpha * std::sqrt(1.0 * 4.0) == doctest::Approx(2.0));
}

TEST_CASE("scaled_params requires a positive diagonal") {
  CHECK_THROWS_AS(scaled_params(sym3(1, 0, 1, 0, 0, 0)), NonpositiveDiagonal);
  CHECK_THROWS_AS(scaled_params(SymMatrix(2)), OrderMismatch);
}

TEST_CASE("is_copositive on the identity") {
  const CopositivityVerdict v = is_copositive(SymMatrix::identity(3));
  CHECK(v.member);
  CHECK(v.margin == 1.0);
  CHECK(!v.witness.has_value());
  CHECK(v.slacks.size() == 7);
}

TEST_CASE("is_copositive rejects the two-negative non-member with a witness") {
  const CopositivityVerdict v = is_copositive(two_negative_nonmember());
  REQUIRE(!v.member);
  REQUIRE(v.witness.has_value());
  CHECK(witness_on_simplex(*v.witness));
  // the hand point (1/2, 1/4, 1/4) already reaches -0.125; refinement can
  // only improve on it
  CHECK(v.witness->value <= -0.125 + 1e-12);
  CHECK(v.witness->value ==
        doctest::Approx(quadratic_form(two_negative_nonmember(),
                                       v.witness->point))
            .epsilon(1e-12));
  CHECK(v.margin == v.witness->value);
}

TEST_CASE("is_copositive accepts the boundary family matrix") {
  const AnglePair family = antipodal_family_pair(0.25);
  CHECK(is_copositive(family.a).member);
  CHECK(is_copositive(family.b).member);
}

TEST_CASE("is_copositive low orders") {
  SymMatrix neg(1);
  neg(0, 0) = -0.5;
  const CopositivityVerdict v1 = is_copositive(neg);
  CHECK(!v1.member);
  REQUIRE(v1.witness.has_value());
  CHECK(v1.witness->value == doctest::Approx(-0.5));

  const CopositivityVerdict v2 =
      is_copositive(SymMatrix::from_rows({{1, -1}, {-1, 1}}));
  CHECK(v2.member);
  CHECK(v2.margin == 0.0);

  const CopositivityVerdict v3 =
      is_copositive(SymMatrix::from_rows({{1, -1.1}, {-1.1, 1}}));
  CHECK(!v3.member);

  CHECK_THROWS_AS(is_copositive(SymMatrix(4)), UnsupportedOrder);
}

TEST_CASE("sign-case test matches the examples") {
  const double r8 = -std::sqrt(0.125);
  const CopositivityVerdict boundary =
      is_copositive_by_sign_case(sym3(0.5, 0.25, 0.25, r8, r8, 0.25));
  CHECK(boundary.member);
  CHECK(std::abs(boundary.margin) <= 1e-12);

  const CopositivityVerdict bad =
      is_copositive_by_sign_case(two_negative_nonmember());
  CHECK(!bad.member);

  const CopositivityVerdict psd_case =
      is_copositive_by_sign_case(sym3(1, 1, 1, -1, -1, -1));
  CHECK(!psd_case.member);
  CHECK(psd_case.slacks[0] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("sign-case test guards") {
  CHECK_THROWS_AS(is_copositive_by_sign_case(SymMatrix(2)), UnsupportedOrder);
  CHECK_THROWS_AS(is_copositive_by_sign_case(sym3(-1, 1, 1, 0, 0, 0)),
                  NegativeDiagonal);
}

TEST_CASE("canonical permutation places negatives first") {
  // negatives at (0,2) and (1,2): shared index 2 must map to position 0
  const SymMatrix m = sym3(1, 2, 3, 0.5, -0.25, -0.75);
  const auto perm = canonical_sign_permutation(m);
  const SymMatrix p = permuted(m, perm);
  CHECK(p(0, 1) < 0.0);
  CHECK(p(0, 2) < 0.0);
  CHECK(p(1, 2) >= 0.0);
  // ties on the sign pattern break by entry value: (0,1) gets the smaller
  CHECK(p(0, 1) <= p(0, 2));

  const SymMatrix one = sym3(1, 2, 3, 0.5, 0.25, -0.75);
  const SymMatrix q = permuted(one, canonical_sign_permutation(one));
  CHECK(q(0, 1) < 0.0);
  CHECK(q(0, 2) >= 0.0);
  CHECK(q(1, 2) >= 0.0);
}

TEST_CASE("sign-case test handles vanishing diagonals") {
  // one negative against a zero diagonal: not copositive
  const CopositivityVerdict v1 =
      is_copositive_by_sign_case(sym3(0, 1, 1, -0.5, 0, 0));
  CHECK(!v1.member);
  // two negatives against a zero diagonal
  const CopositivityVerdict v2 =
      is_copositive_by_sign_case(sym3(0, 1, 1, -0.1, -0.1, 0.5));
  CHECK(!v2.member);
  // all zero with nonnegative entries stays a member
  const CopositivityVerdict v3 =
      is_copositive_by_sign_case(sym3(0, 0, 0, 0.5, 0, 0));
  CHECK(v3.member);
}

TEST_CASE("simplex oracle trivial examples") {
  const SimplexScan centroid = simplex_oracle(SymMatrix::identity(3), 99);
  CHECK(centroid.min_value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  for (double x : centroid.argmin) {
    CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }

  const SimplexScan edge =
      simplex_oracle(SymMatrix::from_rows({{1, -1}, {-1, 1}}), 2);
  CHECK(edge.min_value == 0.0);
  CHECK(edge.argmin == std::vector<double>{0.5, 0.5});

  const SimplexScan hand = simplex_oracle(two_negative_nonmember(), 4);
  CHECK(hand.min_value == -0.125);
  CHECK(hand.argmin == std::vector<double>{0.5, 0.25, 0.25});
}

TEST_CASE("simplex oracle caps the lattice") {
  CHECK_THROWS_AS(simplex_oracle(SymMatrix::identity(10), 100), ResourceCap);
  CHECK_THROWS_AS(simplex_oracle(SymMatrix::identity(2), 0), DomainError);
}

TEST_CASE("parallel oracle is bit-identical to the serial reference") {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;
    const SymMatrix a = random_unit_symmetric(n, child_seed(Seed{31}, trial));
    const SimplexScan s = simplex_oracle_serial(a, 37);
    const SimplexScan p = simplex_oracle(a, 37);
    CHECK(s.min_value == p.min_value);
    CHECK(s.argmin == p.argmin);
  }
  // all-ties case: the zero matrix; both must pick the lexicographically
  // smallest lattice point
  const SimplexScan z = simplex_oracle(SymMatrix(3), 5);
  const SimplexScan zs = simplex_oracle_serial(SymMatrix(3), 5);
  CHECK(z.min_value == 0.0);
  CHECK(z.argmin == std::vector<double>{0.0, 0.0, 1.0});
  CHECK(zs.argmin == z.argmin);
}

TEST_CASE("distance to the cone: nonnegative fast path") {
  const SymMatrix a = sym3(1, 2, 3, 0.5, 0.25, 0.75);
  const ConeDecomposition d = dist_to_copositive(a);
  CHECK(d.distance == 0.0);
  CHECK(norm(d.psd_part) == 0.0);
  CHECK(max_abs_diff(d.nonneg_part, a) == 0.0);
}

TEST_CASE("distance of -I is sqrt(3) with zero projection") {
  const ConeDecomposition d = dist_to_copositive(-SymMatrix::identity(3));
  CHECK(d.distance == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(norm(d.psd_part) <= 1e-14);
  CHECK(norm(d.nonneg_part) == 0.0);
}

TEST_CASE("distance of the boundary pair matrix is zero") {
  const ConeDecomposition d =
      dist_to_copositive(sym3(0.5, 0.5, 0.0, -0.5, 0.0, 0.0));
  CHECK(d.distance <= 1e-10);
}

TEST_CASE("distance rejects orders past four") {
  CHECK_THROWS_AS(dist_to_copositive(SymMatrix(5)), UnsupportedOrder);
}

TEST_CASE("block descent objective is nonincreasing") {
  for (int trial = 0; trial < 100; ++trial) {
    const SymMatrix a = random_unit_symmetric(3, child_seed(Seed{41}, trial));
    const ConeDecomposition d = dist_to_copositive(a, 1e-12, 100000, true);
    for (std::size_t k = 1; k < d.objective_trace.size(); ++k) {
      REQUIRE(d.objective_trace[k] <= d.objective_trace[k - 1] + 1e-15);
    }
  }
}

TEST_CASE("oracle soundness and completeness against the exact test") {
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const SymMatrix a = random_unit_symmetric(3, child_seed(Seed{51}, trial));
    const CopositivityVerdict v = is_copositive(a);
    if (v.member && v.margin > 1e-6) {
      REQUIRE(simplex_oracle(a, 100).min_value >= -1e-9);
      ++checked;
    } else if (!v.member && v.margin < -1e-3) {
      REQUIRE(simplex_oracle(a, 200).min_value < 0.0);
      ++checked;
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("sign-case and inequality tests agree on mixed-scale samples") {
  GaussianSampler g(Seed{61});
  int members = 0;
  int by_case[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 100000; ++trial) {
    const SymMatrix a = sample_sign_mixed(g);
    const CopositivityVerdict direct = is_copositive(a);
    const CopositivityVerdict cases = is_copositive_by_sign_case(a);
    REQUIRE(direct.member == cases.member);
    members += direct.member;
    ++by_case[classify_signs(a).negatives_above_diagonal];
  }
  // the generator must actually reach every sign case and both verdicts
  CHECK(members > 1000);
  CHECK(members < 99000);
  for (int count : by_case) CHECK(count > 1000);
}

TEST_CASE("members keep their off-diagonal entries inside the sharp bounds") {
  int members = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const SymMatrix a = random_unit_symmetric(3, child_seed(Seed{71}, trial));
    if (!is_copositive(a).member) continue;
    ++members;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        REQUIRE(a(i, j) >= -0.5 - 1e-12);
        REQUIRE(a(i, j) <= std::sqrt(2.0) / 2.0 + 1e-12);
      }
    }
  }
  CHECK(members > 500);
}

TEST_CASE("members with a vanishing diagonal entry have a nonnegative row") {
  GaussianSampler g(Seed{81});
  int members = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    SymMatrix a = sample_sign_mixed(g);
    const int zero_row = trial % 3;
    a(zero_row, zero_row) = 0.0;
    if (!is_copositive(a).member) continue;
    ++members;
    for (int j = 0; j < 3; ++j) REQUIRE(a(zero_row, j) >= -1e-10);
  }
  CHECK(members > 200);
}

TEST_CASE("zero distance and membership coincide on random samples") {
  for (int trial = 0; trial < 10000; ++trial) {
    const SymMatrix a = random_unit_symmetric(3, child_seed(Seed{91}, trial));
    const bool member = is_copositive(a, 1e-6).member;
    const bool near = dist_to_copositive(a).distance <= 2e-6;
    REQUIRE(member == near);
  }
}

}  // TEST_SUITE
