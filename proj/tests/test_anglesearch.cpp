#include <doctest.h>

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "copangle/cone_distance.hpp"
#include "copangle/copositivity.hpp"
#include "copangle/random.hpp"
#include "copangle/search.hpp"
#include "copangle/simplex_oracle.hpp"
#include "copangle/spectral.hpp"

using namespace copangle;

namespace {

const double kTargetAngle = 0.75 * std::numbers::pi;

bool reports_identical(const SearchReport& x, const SearchReport& y) {
  if (x.best_angle != y.best_angle || x.best_start != y.best_start) {
    return false;
  }
  if (max_abs_diff(x.best.a, y.best.a) != 0.0) return false;
  if (max_abs_diff(x.best.b, y.best.b) != 0.0) return false;
  if (x.per_start.size() != y.per_start.size()) return false;
  for (std::size_t i = 0; i < x.per_start.size(); ++i) {
    const StartResult& a = x.per_start[i];
    const StartResult& b = y.per_start[i];
    if (a.final_angle != b.final_angle || a.iterations != b.iterations ||
        a.converged != b.converged || a.inner_trace != b.inner_trace) {
      return false;
    }
  }
  return true;
}

// copositive probes used to certify support points: the family pairs, the
// elementary nonnegative matrices, and rank-one squares of simplex points
std::vector<SymMatrix> probe_set() {
  std::vector<SymMatrix> probes;
  for (int i = 0; i <= 10; ++i) {
    const AnglePair pair = antipodal_family_pair(i * 0.05);
    probes.push_back(pair.a);
    probes.push_back(pair.b);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      SymMatrix e(3);
      e(i, j) = 1.0;
      probes.push_back(e);
    }
  }
  const int res = 6;
  for (int k1 = 0; k1 <= res; ++k1) {
    for (int k2 = 0; k2 + k1 <= res; ++k2) {
      const double x[3] = {k1 / double(res), k2 / double(res),
                           (res - k1 - k2) / double(res)};
      SymMatrix rank_one(3);
      for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) rank_one(i, j) = x[i] * x[j];
      }
      probes.push_back(rank_one);
    }
  }
  return probes;
}

}  // namespace

TEST_SUITE("anglesearch") {

TEST_CASE("support point of a nonnegative unit matrix is the matrix") {
  SymMatrix v(3);
  v(0, 0) = 0.6;
  v(0, 1) = 0.4;
  v(1, 2) = 0.2;
  v = normalized(v);
  CHECK(max_abs_diff(support_point(v), v) <= 1e-14);
}

TEST_CASE("support point of the negated canonical pair members") {
  const AnglePair pair = canonical_antipodal_pair();
  CHECK(max_abs_diff(support_point(-pair.a), pair.b) <= 1e-12);
  CHECK(max_abs_diff(support_point(-pair.b), pair.a) <= 1e-12);
}

TEST_CASE("support point of -I has no projection") {
  CHECK_THROWS_AS(support_point(-SymMatrix::identity(3)), ZeroProjection);
  CHECK_THROWS_AS(support_point(SymMatrix(5)), UnsupportedOrder);
}

TEST_CASE("projection certificate on random directions") {
  const std::vector<SymMatrix> probes = probe_set();
  for (int trial = 0; trial < 200; ++trial) {
    const SymMatrix v = random_unit_symmetric(3, child_seed(Seed{111}, trial));
    const ConeDecomposition d = dist_to_copositive(v);
    const SymMatrix projection = d.psd_part + d.nonneg_part;
    if (norm(projection) <= 1e-12) continue;
    const SymMatrix residual = v - projection;
    REQUIRE(std::abs(inner_product(residual, projection)) <= 1e-8);
    for (const SymMatrix& probe : probes) {
      REQUIRE(inner_product(residual, probe) <= 1e-8);
    }
  }
}

TEST_CASE("alternating search fixes the canonical pair") {
  const AnglePair pair = canonical_antipodal_pair();
  SearchConfig cfg;
  const AlternatingResult r = alternating_search(pair.a, cfg);
  CHECK(r.converged);
  CHECK(r.feasible);
  CHECK(r.pair.angle == doctest::Approx(kTargetAngle).epsilon(1e-12));
  CHECK(max_abs_diff(r.pair.a, pair.a) <= 1e-9);
  CHECK(max_abs_diff(r.pair.b, pair.b) <= 1e-9);
}

TEST_CASE("alternating search from the normalized identity hits the polar cone") {
  // -I/sqrt(3) pairs nonpositively with every copositive matrix, so the
  // first block step has no projection; the error propagates to the caller.
  SearchConfig cfg;
  CHECK_THROWS_AS(alternating_search(normalized(SymMatrix::identity(3)), cfg),
                  ZeroProjection);
}

TEST_CASE("alternating search from an interior start stays sound") {
  SymMatrix a0(3);
  a0(0, 0) = a0(1, 1) = a0(2, 2) = 1.0;
  a0(0, 1) = -0.3;
  a0(0, 2) = 0.2;
  a0(1, 2) = 0.1;
  SearchConfig cfg;
  const AlternatingResult r = alternating_search(normalized(a0), cfg);
  CHECK(r.converged);
  CHECK(r.pair.angle <= kTargetAngle + 1e-9);
}

TEST_CASE("alternating search trajectories are nonincreasing") {
  SearchConfig cfg;
  int finished = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix v = random_unit_symmetric(3, child_seed(Seed{121}, trial));
    try {
      const AlternatingResult r = alternating_search(support_point(v), cfg);
      for (std::size_t k = 1; k < r.inner_trace.size(); ++k) {
        REQUIRE(r.inner_trace[k] <= r.inner_trace[k - 1] + 1e-10);
      }
      ++finished;
    } catch (const ZeroProjection&) {
      // restart responsibility lies with the caller; skip such starts here
    }
  }
  CHECK(finished > 25);
}

TEST_CASE("alternating search validates its start") {
  SearchConfig cfg;
  CHECK_THROWS_AS(alternating_search(SymMatrix::identity(3), cfg),
                  DomainError);  // not unit norm
  SymMatrix bad(3);
  bad(0, 0) = 1.0;
  bad(1, 1) = 1.0;
  bad(0, 1) = -1.2;
  CHECK_THROWS_AS(alternating_search(normalized(bad), cfg), DomainError);
}

TEST_CASE("multistart reports are deterministic") {
  SearchConfig cfg;
  cfg.order = 3;
  cfg.starts = 8;
  cfg.seed = Seed{2024};
  const SearchReport first = multistart_max_angle(cfg);
  const SearchReport second = multistart_max_angle(cfg);
  CHECK(reports_identical(first, second));

#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const SearchReport serial = multistart_max_angle(cfg);
  omp_set_num_threads(3);
  const SearchReport threaded = multistart_max_angle(cfg);
  omp_set_num_threads(saved);
  CHECK(reports_identical(serial, threaded));
  CHECK(reports_identical(first, serial));
#endif
}

TEST_CASE("multistart reported pairs are feasible and consistent") {
  SearchConfig cfg;
  cfg.order = 3;
  cfg.starts = 12;
  cfg.seed = Seed{55};
  const SearchReport report = multistart_max_angle(cfg);
  REQUIRE(report.best_start >= 0);
  double best = 0.0;
  for (std::size_t i = 0; i < report.per_start.size(); ++i) {
    if (report.start_pairs[i]) {
      best = std::max(best, report.per_start[i].final_angle);
      REQUIRE(is_copositive(report.start_pairs[i]->a, 1e-8).member);
      REQUIRE(is_copositive(report.start_pairs[i]->b, 1e-8).member);
      REQUIRE(std::abs(norm(report.start_pairs[i]->a) - 1.0) <= 1e-12);
      REQUIRE(std::abs(norm(report.start_pairs[i]->b) - 1.0) <= 1e-12);
    }
  }
  CHECK(report.best_angle == best);
  CHECK(is_copositive(report.best.a, 1e-8).member);
  CHECK(is_copositive(report.best.b, 1e-8).member);
}

TEST_CASE("multistart search reaches the maximal angle at order 2") {
  SearchConfig cfg;
  cfg.order = 2;
  cfg.starts = 8;
  cfg.seed = Seed{7};
  const SearchReport report = multistart_max_angle(cfg);
  CHECK(std::abs(report.best_angle - kTargetAngle) <= 1e-6);
}

TEST_CASE("multistart validates its configuration") {
  SearchConfig cfg;
  cfg.order = 5;
  CHECK_THROWS_AS(multistart_max_angle(cfg), UnsupportedOrder);
  cfg.order = 3;
  cfg.starts = 0;
  CHECK_THROWS_AS(multistart_max_angle(cfg), DomainError);
}

TEST_CASE("order-4 searches certify feasibility through the decomposition") {
  SearchConfig cfg;
  cfg.order = 4;
  cfg.starts = 4;
  cfg.seed = Seed{99};
  const SearchReport report = multistart_max_angle(cfg);
  REQUIRE(report.best_start >= 0);
  CHECK(dist_to_copositive(report.best.a, cfg.inner_tol).distance <=
        2.0 * cfg.inner_tol);
  CHECK(dist_to_copositive(report.best.b, cfg.inner_tol).distance <=
        2.0 * cfg.inner_tol);
  CHECK(report.best_angle >= kTargetAngle - 1e-6);
}

TEST_CASE("psd-vs-nonnegative search hits the known constants") {
  SearchConfig cfg;
  cfg.starts = 16;
  cfg.seed = Seed{42};
  const SearchReport psi3 = psd_nonneg_max_angle(3, cfg);
  CHECK(std::abs(psi3.best_angle - kTargetAngle) <= 1e-6);

  const SearchReport psi4 = psd_nonneg_max_angle(4, cfg);
  const SearchReport psi5 = psd_nonneg_max_angle(5, cfg);
  CHECK(psi5.best_angle >= psi4.best_angle - 1e-8);
  CHECK(psi4.best_angle >= psi3.best_angle - 1e-8);

  // feasibility of the best pair: PSD side and nonnegative side
  CHECK(min_eigenvalue(psi4.best.a) >= -1e-8);
  CHECK(entrywise_nonnegative(psi4.best.b, 1e-15));

  CHECK_THROWS_AS(psd_nonneg_max_angle(7, cfg), UnsupportedOrder);
  CHECK_THROWS_AS(psd_nonneg_max_angle(1, cfg), UnsupportedOrder);
}

TEST_CASE("psd-vs-nonnegative trajectories are monotone and deterministic") {
  SearchConfig cfg;
  cfg.starts = 6;
  cfg.seed = Seed{5};
  const SearchReport a = psd_nonneg_max_angle(4, cfg);
  const SearchReport b = psd_nonneg_max_angle(4, cfg);
  CHECK(reports_identical(a, b));
  for (const StartResult& s : a.per_start) {
    for (std::size_t k = 1; k < s.inner_trace.size(); ++k) {
      REQUIRE(s.inner_trace[k] <= s.inner_trace[k - 1] + 1e-10);
    }
  }
}

}  // TEST_SUITE
