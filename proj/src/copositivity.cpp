#include "copangle/copositivity.hpp"

#include <algorithm>
#include <cmath>

#include "copangle/simplex_oracle.hpp"
#include "copangle/spectral.hpp"

namespace copangle {

namespace {

constexpr long kWitnessGrid = 48;

double det3(const SymMatrix& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(0, 2);
  const double d = m(1, 1), e = m(1, 2), f = m(2, 2);
  return a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
}

// sqrt over products of clipped diagonal entries; the clip keeps tiny
// negative diagonals (within tolerance of zero) from poisoning the root.
double root_of_product(double x, double y) {
  return std::sqrt(std::max(x, 0.0) * std::max(y, 0.0));
}

void require_order3(const SymMatrix& a, const char* what) {
  if (a.order() != 3) {
    throw OrderMismatch(std::string(what) + " requires order 3");
  }
}

int argmin_index(const std::vector<double>& v) {
  return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}

// One projected coordinate-descent pass over the simplex: for every ordered
// coordinate pair, move mass along e_i - e_j to the constrained minimizer.
std::vector<double> refine_pass(const SymMatrix& a, std::vector<double> x) {
  const int n = a.order();
  std::vector<double> g(n);
  auto recompute_gradient = [&] {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += a(i, j) * x[j];
      g[i] = s;
    }
  };
  recompute_gradient();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double slope = 2.0 * (g[i] - g[j]);
      const double curv = a(i, i) - 2.0 * a(i, j) + a(j, j);
      const double lo = -x[i];
      const double hi = x[j];
      double t;
      if (curv > 0.0) {
        t = std::clamp(-slope / (2.0 * curv), lo, hi);
      } else {
        // concave or flat along this direction: best point is an endpoint
        const double at_lo = slope * lo + curv * lo * lo;
        const double at_hi = slope * hi + curv * hi * hi;
        t = at_lo < at_hi ? lo : hi;
      }
      if (slope * t + curv * t * t < 0.0) {
        x[i] += t;
        x[j] -= t;
        recompute_gradient();
      }
    }
  }
  return x;
}

void attach_witness(const SymMatrix& a, CopositivityVerdict& verdict) {
  verdict.violated_index = argmin_index(verdict.slacks);
  verdict.margin = verdict.slacks[verdict.violated_index];
  if (auto w = find_witness(a, kWitnessGrid)) {
    verdict.margin = w->value;
    verdict.witness = std::move(w);
  }
}

CopositivityVerdict verdict_from_slacks(const SymMatrix& a,
                                        std::vector<double> slacks,
                                        double tol) {
  CopositivityVerdict v;
  v.slacks = std::move(slacks);
  v.member = std::all_of(v.slacks.begin(), v.slacks.end(),
                         [&](double s) { return s >= -tol; });
  if (v.member) {
    v.margin = *std::min_element(v.slacks.begin(), v.slacks.end());
  } else {
    attach_witness(a, v);
  }
  return v;
}

}  // namespace

CaseSignature classify_signs(const SymMatrix& a) {
  require_order3(a, "classify_signs");
  int count = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (a(i, j) < 0.0) ++count;
    }
  }
  return CaseSignature{count};
}

ScaledParams scaled_params(const SymMatrix& a) {
  require_order3(a, "scaled_params");
  for (int i = 0; i < 3; ++i) {
    if (!(a(i, i) > 0.0)) {
      throw NonpositiveDiagonal("diagonal scaling requires a positive diagonal");
    }
  }
  return ScaledParams{a(0, 1) / std::sqrt(a(0, 0) * a(1, 1)),
                      a(0, 2) / std::sqrt(a(0, 0) * a(2, 2)),
                      a(1, 2) / std::sqrt(a(1, 1) * a(2, 2))};
}

std::optional<Witness> find_witness(const SymMatrix& a, long grid_resolution) {
  const SimplexScan scan = simplex_oracle_serial(a, grid_resolution);
  std::vector<double> refined = refine_pass(a, scan.argmin);
  const double refined_value = quadratic_form(a, refined);
  const double best = std::min(refined_value, scan.min_value);
  if (!(best < 0.0)) return std::nullopt;
  Witness w;
  if (refined_value <= scan.min_value) {
    w.point = std::move(refined);
    w.value = refined_value;
  } else {
    w.point = scan.argmin;
    w.value = scan.min_value;
  }
  return w;
}

CopositivityVerdict is_copositive(const SymMatrix& a, double tol) {
  const int n = a.order();
  if (n > 3) {
    throw UnsupportedOrder("exact copositivity test supports orders 1..3");
  }

  if (n == 1) {
    return verdict_from_slacks(a, {a(0, 0)}, tol);
  }

  if (n == 2) {
    const double pair = a(0, 1) + root_of_product(a(0, 0), a(1, 1));
    return verdict_from_slacks(a, {a(0, 0), a(1, 1), pair}, tol);
  }

  const double d0 = a(0, 0), d1 = a(1, 1), d2 = a(2, 2);
  const double pair01 = a(0, 1) + root_of_product(d0, d1);
  const double pair02 = a(0, 2) + root_of_product(d0, d2);
  const double pair12 = a(1, 2) + root_of_product(d1, d2);
  const double linear = std::sqrt(std::max(d0, 0.0) * std::max(d1, 0.0) *
                                  std::max(d2, 0.0)) +
                        a(0, 1) * std::sqrt(std::max(d2, 0.0)) +
                        a(0, 2) * std::sqrt(std::max(d1, 0.0)) +
                        a(1, 2) * std::sqrt(std::max(d0, 0.0));
  // Disjunctive form of the seventh inequality: the slack passes when
  // either branch does.
  const double last = std::max(det3(a), linear);
  return verdict_from_slacks(a, {d0, d1, d2, pair01, pair02, pair12, last},
                             tol);
}

std::array<int, 3> canonical_sign_permutation(const SymMatrix& a) {
  require_order3(a, "canonical_sign_permutation");
  static constexpr std::array<std::array<int, 3>, 6> kPerms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  auto key = [&](const std::array<int, 3>& p) {
    const double e01 = a(p[0], p[1]);
    const double e02 = a(p[0], p[2]);
    const double e12 = a(p[1], p[2]);
    return std::array<double, 6>{e01 < 0.0 ? 0.0 : 1.0, e02 < 0.0 ? 0.0 : 1.0,
                                 e12 < 0.0 ? 0.0 : 1.0, e01, e02, e12};
  };
  std::array<int, 3> best = kPerms[0];
  auto best_key = key(best);
  for (const auto& p : kPerms) {
    auto k = key(p);
    if (k < best_key) {
      best = p;
      best_key = k;
    }
  }
  return best;
}

CopositivityVerdict is_copositive_by_sign_case(const SymMatrix& a,
                                               double tol) {
  if (a.order() != 3) {
    throw UnsupportedOrder("sign-case copositivity test supports order 3");
  }
  for (int i = 0; i < 3; ++i) {
    if (a(i, i) < -tol) {
      throw NegativeDiagonal("sign-case test requires a nonnegative diagonal");
    }
  }

  const auto perm = canonical_sign_permutation(a);
  const SymMatrix p = permuted(a, perm);
  const int negatives = classify_signs(p).negatives_above_diagonal;
  const double d0 = p(0, 0), d1 = p(1, 1), d2 = p(2, 2);

  switch (negatives) {
    case 0: {
      CopositivityVerdict v;
      v.member = true;
      v.slacks = {d0, d1, d2};
      v.margin = std::min({d0, d1, d2});
      return v;
    }
    case 1:
      return verdict_from_slacks(
          a, {d0, d1, d2, p(0, 1) + root_of_product(d0, d1)}, tol);
    case 2: {
      if (std::min({d0, d1, d2}) <= tol) {
        // Scaling is undefined against a vanishing diagonal; the pairwise
        // and determinant inequalities decide the degenerate subcase.
        const double linear =
            std::sqrt(std::max(d0, 0.0) * std::max(d1, 0.0) *
                      std::max(d2, 0.0)) +
            p(0, 1) * std::sqrt(std::max(d2, 0.0)) +
            p(0, 2) * std::sqrt(std::max(d1, 0.0)) +
            p(1, 2) * std::sqrt(std::max(d0, 0.0));
        return verdict_from_slacks(
            a,
            {d0, d1, d2, p(0, 1) + root_of_product(d0, d1),
             p(0, 2) + root_of_product(d0, d2),
             p(1, 2) + root_of_product(d1, d2),
             std::max(det3(p), linear)},
            tol);
      }
      const ScaledParams sp = scaled_params(p);
      // Clip at -1 once alpha, beta passed their own inequality, so the
      // root argument stays nonnegative at the boundary.
      const double ac = std::max(sp.alpha, -1.0);
      const double bc = std::max(sp.beta, -1.0);
      const double root =
          std::sqrt((1.0 - ac * ac) * (1.0 - bc * bc));
      const double gamma_slack = sp.gamma - (ac * bc - root);
      return verdict_from_slacks(
          a, {d0, d1, d2, sp.alpha + 1.0, sp.beta + 1.0, gamma_slack}, tol);
    }
    default: {
      // All off-diagonal entries negative: copositive iff positive
      // semidefinite.
      const double mineig = min_eigenvalue(p);
      CopositivityVerdict v;
      v.slacks = {mineig};
      v.member = mineig >= -tol;
      v.margin = mineig;
      if (!v.member) {
        if (auto w = find_witness(a, kWitnessGrid)) {
          v.margin = w->value;
          v.witness = std::move(w);
        } else {
          v.violated_index = 0;
        }
      }
      return v;
    }
  }
}

}  // namespace copangle
