#include "copangle/search.hpp"

#include <algorithm>
#include <cmath>

#include "copangle/cone_distance.hpp"
#include "copangle/copositivity.hpp"
#include "copangle/spectral.hpp"

namespace copangle {

namespace {

constexpr double kZeroNorm = 1e-12;
constexpr double kFeasibilityTol = 1e-8;

void validate_config(const SearchConfig& config, int min_order,
                     int max_order) {
  if (config.order < min_order || config.order > max_order) {
    throw UnsupportedOrder("search order out of range");
  }
  if (config.starts < 1) throw DomainError("starts must be >= 1");
  if (!(config.inner_tol > 0.0) || !(config.outer_tol > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
}

bool copositive_within(const SymMatrix& m, double inner_tol) {
  if (m.order() <= 3) {
    return is_copositive(m, kFeasibilityTol).member;
  }
  return dist_to_copositive(m, inner_tol).distance <= 2.0 * inner_tol;
}

// Shared multistart driver: run_start(i, seed) computes one start and may
// throw; a throwing start is retried once from a fresh child seed. Rows are
// merged in index order.
template <typename RunStart>
SearchReport run_multistart(const SearchConfig& config, RunStart run_start) {
  std::vector<StartResult> rows(config.starts);
  std::vector<std::optional<AnglePair>> pairs(config.starts);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < config.starts; ++i) {
    const Seed first = child_seed(config.seed, static_cast<std::uint64_t>(i));
    try {
      rows[i] = run_start(i, first, pairs[i]);
    } catch (const Error&) {
      try {
        rows[i] = run_start(i, child_seed(first, 0), pairs[i]);
      } catch (const Error&) {
        rows[i] = StartResult{i, 0.0, 0, false, {}};
        pairs[i].reset();
      }
    }
  }

  SearchReport report{config, AnglePair{SymMatrix(config.order),
                                        SymMatrix(config.order), 0.0, 0.0},
                      0.0, -1, std::move(rows), std::move(pairs)};
  for (int i = 0; i < config.starts; ++i) {
    if (!report.start_pairs[i]) continue;
    if (report.best_start < 0 ||
        report.per_start[i].final_angle > report.best_angle) {
      report.best_start = i;
      report.best_angle = report.per_start[i].final_angle;
      report.best = *report.start_pairs[i];
    }
  }
  if (report.best_start < 0) {
    throw ConvergenceFailure("no start produced a feasible pair");
  }
  return report;
}

}  // namespace

SymMatrix support_point(const SymMatrix& v, double tol, int max_iter) {
  const ConeDecomposition d = dist_to_copositive(v, tol, max_iter);
  const SymMatrix projection = d.psd_part + d.nonneg_part;
  if (norm(projection) <= kZeroNorm * (1.0 + norm(v))) {
    throw ZeroProjection("input lies in the polar cone");
  }
  return normalized(projection);
}

AlternatingResult alternating_search(const SymMatrix& a0,
                                     const SearchConfig& config) {
  if (a0.order() > 4) {
    throw UnsupportedOrder("alternating search supports orders <= 4");
  }
  if (std::abs(norm(a0) - 1.0) > 1e-9) {
    throw DomainError("start matrix must be unit norm");
  }
  if (!copositive_within(a0, config.inner_tol)) {
    throw DomainError("start matrix must be copositive");
  }

  SymMatrix a = a0;
  SymMatrix b = support_point(-a, config.inner_tol);
  AlternatingResult result{AnglePair{a, b, 0.0, 0.0}, {}, 0, false, false};
  double prev = inner_product(a, b);
  result.inner_trace.push_back(prev);

  for (int it = 0; it < config.max_outer_iter; ++it) {
    a = support_point(-b, config.inner_tol);
    result.inner_trace.push_back(inner_product(a, b));
    b = support_point(-a, config.inner_tol);
    const double current = inner_product(a, b);
    result.inner_trace.push_back(current);
    result.iterations = it + 1;
    if (prev - current < config.outer_tol) {
      result.converged = true;
      break;
    }
    prev = current;
  }

  result.feasible = copositive_within(a, config.inner_tol) &&
                    copositive_within(b, config.inner_tol);
  result.converged = result.converged && result.feasible;
  result.pair = make_angle_pair(std::move(a), std::move(b));
  return result;
}

SearchReport multistart_max_angle(const SearchConfig& config) {
  validate_config(config, 2, 4);
  return run_multistart(
      config, [&](int i, Seed seed, std::optional<AnglePair>& pair) {
        const SymMatrix direction = random_unit_symmetric(config.order, seed);
        const SymMatrix start = support_point(direction, config.inner_tol);
        AlternatingResult r = alternating_search(start, config);
        StartResult row{i, r.pair.angle, r.iterations, r.converged,
                        std::move(r.inner_trace)};
        if (r.feasible) pair = std::move(r.pair);
        return row;
      });
}

SearchReport psd_nonneg_max_angle(int order, const SearchConfig& config) {
  SearchConfig cfg = config;
  cfg.order = order;
  if (order < 2 || order > 6) {
    throw UnsupportedOrder("PSD-vs-nonnegative search supports orders 2..6");
  }
  if (cfg.starts < 1) throw DomainError("starts must be >= 1");

  return run_multistart(
      cfg, [&](int i, Seed seed, std::optional<AnglePair>& pair) {
        const SymMatrix direction = random_unit_symmetric(order, seed);
        SymMatrix b = positive_part(direction);
        if (norm(b) <= kZeroNorm) {
          throw ZeroProjection("start direction has no positive part");
        }
        b = normalized(b);

        SymMatrix a(order);
        StartResult row{i, 0.0, 0, false, {}};
        double prev = 1.0;
        for (int it = 0; it < cfg.max_outer_iter; ++it) {
          SymMatrix psd = psd_project(-b);
          if (norm(psd) <= kZeroNorm) {
            throw ZeroProjection("PSD block step vanished");
          }
          a = normalized(psd);
          row.inner_trace.push_back(inner_product(a, b));
          SymMatrix pos = positive_part(-a);
          if (norm(pos) <= kZeroNorm) {
            throw ZeroProjection("nonnegative block step vanished");
          }
          b = normalized(pos);
          const double current = inner_product(a, b);
          row.inner_trace.push_back(current);
          row.iterations = it + 1;
          if (prev - current < cfg.outer_tol) {
            row.converged = true;
            break;
          }
          prev = current;
        }

        const bool feasible = min_eigenvalue(a) >= -kFeasibilityTol &&
                              entrywise_nonnegative(b, 1e-15);
        row.converged = row.converged && feasible;
        AnglePair p = make_angle_pair(std::move(a), std::move(b));
        row.final_angle = p.angle;
        if (feasible) pair = std::move(p);
        return row;
      });
}

}  // namespace copangle
