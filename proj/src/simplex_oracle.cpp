#include "copangle/simplex_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace copangle {

namespace {

constexpr double kLatticeCap = 1e8;

// q at the lattice point k/resolution, accumulated in fixed index order so
// serial and parallel scans produce bit-identical values.
double eval_point(const SymMatrix& a, const std::vector<long>& k, double inv) {
  const int n = a.order();
  double diag = 0.0;
  double off = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xi = static_cast<double>(k[i]) * inv;
    diag += a(i, i) * xi * xi;
    for (int j = i + 1; j < n; ++j) {
      off += a(i, j) * xi * (static_cast<double>(k[j]) * inv);
    }
  }
  return diag + 2.0 * off;
}

struct LocalBest {
  double value = 0.0;
  std::vector<long> k;
  bool set = false;

  void offer(double v, const std::vector<long>& candidate) {
    if (!set || v < value || (v == value && candidate < k)) {
      value = v;
      k = candidate;
      set = true;
    }
  }
};

// Enumerates compositions of `total` into k[from..n-1] in lexicographic
// order, with k[0..from-1] already fixed.
void scan_tail(const SymMatrix& a, std::vector<long>& k, int from, long total,
               double inv, LocalBest& best) {
  const int n = a.order();
  if (from == n - 1) {
    k[from] = total;
    best.offer(eval_point(a, k, inv), k);
    return;
  }
  for (long v = 0; v <= total; ++v) {
    k[from] = v;
    scan_tail(a, k, from + 1, total - v, inv, best);
  }
}

SimplexScan finish(const LocalBest& best, long resolution) {
  SimplexScan out;
  out.min_value = best.value;
  out.argmin.resize(best.k.size());
  const double inv = 1.0 / static_cast<double>(resolution);
  for (std::size_t i = 0; i < best.k.size(); ++i) {
    out.argmin[i] = static_cast<double>(best.k[i]) * inv;
  }
  return out;
}

void check_cap(int order, long resolution) {
  if (resolution < 1) throw DomainError("resolution must be >= 1");
  if (simplex_lattice_size(order, resolution) > kLatticeCap) {
    throw ResourceCap("simplex lattice exceeds 1e8 points");
  }
}

}  // namespace

double simplex_lattice_size(int order, long resolution) {
  double count = 1.0;
  for (int i = 1; i < order; ++i) {
    count *= static_cast<double>(resolution + i) / i;
    if (count > kLatticeCap) return kLatticeCap + 1.0;
  }
  return count;
}

SimplexScan simplex_oracle_serial(const SymMatrix& a, long resolution) {
  check_cap(a.order(), resolution);
  const double inv = 1.0 / static_cast<double>(resolution);
  std::vector<long> k(a.order(), 0);
  LocalBest best;
  scan_tail(a, k, 0, resolution, inv, best);
  return finish(best, resolution);
}

SimplexScan simplex_oracle(const SymMatrix& a, long resolution) {
  check_cap(a.order(), resolution);
  const int n = a.order();
  const double inv = 1.0 / static_cast<double>(resolution);

  if (n == 1) {
    std::vector<long> k{resolution};
    LocalBest best;
    best.offer(eval_point(a, k, inv), k);
    return finish(best, resolution);
  }

  // One slot per first coordinate; merged serially afterwards so the result
  // does not depend on the schedule.
  std::vector<LocalBest> slots(resolution + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (long first = 0; first <= resolution; ++first) {
    std::vector<long> k(n, 0);
    k[0] = first;
    scan_tail(a, k, 1, resolution - first, inv, slots[first]);
  }

  LocalBest best;
  for (const LocalBest& slot : slots) {
    if (slot.set) best.offer(slot.value, slot.k);
  }
  return finish(best, resolution);
}

}  // namespace copangle
