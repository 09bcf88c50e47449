#ifndef COPANGLE_REPORT_HPP
#define COPANGLE_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "copangle/constructions.hpp"

namespace copangle {

/// One line of the reproduction table. For two-sided checks abs_error is
/// |computed - paper_value|; for one-sided bounds it is the violation
/// amount (zero when the bound holds). pass holds exactly when
/// abs_error <= tolerance.
struct ReportRow {
  std::string name;
  double paper_value = 0.0;
  double computed = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

/// Runs the full reproduction suite with pinned configurations and
/// tolerances and returns one row per checked quantity. Deterministic:
/// everything random is seeded.
std::vector<ReportRow> reproduce_all();

/// CSV with header name,paper_value,computed,abs_error,tolerance,pass,seconds.
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);

/// Deviation of a pair from the maximal-angle family, minimized over
/// simultaneous row/column permutations and the two role assignments.
double family_deviation(const AnglePair& pair);

}  // namespace copangle

#endif  // COPANGLE_REPORT_HPP
