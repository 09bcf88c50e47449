#ifndef COPANGLE_SEARCH_HPP
#define COPANGLE_SEARCH_HPP

#include <optional>
#include <vector>

#include "copangle/constructions.hpp"
#include "copangle/random.hpp"
#include "copangle/sym_matrix.hpp"

namespace copangle {

struct SearchConfig {
  int order = 3;
  int starts = 64;
  Seed seed{};
  int max_outer_iter = 500;
  double inner_tol = 1e-12;  ///< projection (block-descent) tolerance
  double outer_tol = 1e-11;  ///< stop when the inner-product decrease drops below this
};

struct StartResult {
  int start_index = 0;
  double final_angle = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> inner_trace;  ///< inner product after each block step; nonincreasing
};

/// Multistart search outcome. best_angle is the maximum over per-start
/// final angles; ties go to the lowest start index. Reports are
/// bit-identical for identical configs regardless of thread count: each
/// start is seeded independently and the reduction runs in index order.
struct SearchReport {
  SearchConfig config;
  AnglePair best;
  double best_angle = 0.0;
  int best_start = -1;
  std::vector<StartResult> per_start;
  /// Final pair of each feasible start, aligned with per_start.
  std::vector<std::optional<AnglePair>> start_pairs;
};

/// Maximizer of <v, B> over the copositive cone intersected with the unit
/// sphere: the normalized cone projection of v, computed through the P+N
/// decomposition (orders <= 4). Throws ZeroProjection when the projection
/// vanishes (v in the polar cone).
SymMatrix support_point(const SymMatrix& v, double tol = 1e-12,
                        int max_iter = 100000);

struct AlternatingResult {
  AnglePair pair;
  std::vector<double> inner_trace;
  int iterations = 0;
  bool converged = false;
  bool feasible = false;
};

/// Alternating pair maximization from a copositive unit start: each block
/// step replaces one member by the support point of the other's negation,
/// an exact block minimizer of the inner product, so the trace is
/// nonincreasing. Stops when the per-iteration decrease falls below
/// config.outer_tol; non-convergence is reported through the flag, not an
/// error. ZeroProjection propagates to the caller.
AlternatingResult alternating_search(const SymMatrix& a0,
                                     const SearchConfig& config);

/// Multistart maximal-angle search on the copositive cone (orders 2..4).
/// Start i draws its direction from child_seed(config.seed, i) and projects
/// it onto the cone; a start that hits ZeroProjection is resampled once
/// from a fresh child seed, then marked failed.
SearchReport multistart_max_angle(const SearchConfig& config);

/// Multistart maximal angle between a unit PSD matrix and a unit
/// entrywise-nonnegative matrix (orders 2..6). Both block steps are closed
/// forms: A <- normalize(psd_project(-B)), B <- normalize(max(-A, 0)).
SearchReport psd_nonneg_max_angle(int order, const SearchConfig& config);

}  // namespace copangle

#endif  // COPANGLE_SEARCH_HPP
