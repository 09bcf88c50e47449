#ifndef COPANGLE_SIMPLEX_ORACLE_HPP
#define COPANGLE_SIMPLEX_ORACLE_HPP

#include <vector>

#include "copangle/sym_matrix.hpp"

namespace copangle {

/// Exact minimum of x^T A x over the lattice x = k/resolution,
/// k nonnegative integers summing to resolution.
struct SimplexScan {
  double min_value = 0.0;
  std::vector<double> argmin;  ///< lexicographically smallest minimizer
};

/// Exhaustive lattice enumeration, OpenMP-parallel over the first lattice
/// coordinate. Per-coordinate results are merged in index order, so the
/// output is identical for any thread count and bit-identical to the serial
/// reference. Throws ResourceCap when the lattice exceeds 1e8 points.
SimplexScan simplex_oracle(const SymMatrix& a, long resolution);

/// Serial reference enumeration in lexicographic order; kept independent of
/// the parallel kernel for testing and benchmarking.
SimplexScan simplex_oracle_serial(const SymMatrix& a, long resolution);

/// Number of lattice points, C(resolution + n - 1, n - 1), saturating at
/// one past the cap.
double simplex_lattice_size(int order, long resolution);

}  // namespace copangle

#endif  // COPANGLE_SIMPLEX_ORACLE_HPP
