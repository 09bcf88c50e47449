#include "copangle/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace copangle {

namespace {

constexpr double kSymmetryTol = 1e-9;

// Next line that carries data: blank lines and '#' comments are skipped.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

SymMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) {
    throw ParseError("missing order line");
  }
  std::istringstream header(line);
  long order = 0;
  if (!(header >> order)) throw ParseError("order line is not an integer");
  std::string trailing;
  if (header >> trailing) throw ParseError("unexpected tokens after the order");
  if (order < 1 || order > 64) {
    throw ParseError("order must lie in [1, 64]");
  }

  const int n = static_cast<int>(order);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_data_line(in, line)) {
      throw ParseError("missing matrix row " + std::to_string(i + 1));
    }
    std::istringstream row(line);
    for (int j = 0; j < n; ++j) {
      if (!(row >> rows[i][j])) {
        throw ParseError("row " + std::to_string(i + 1) +
                         " holds fewer than n values");
      }
      if (!std::isfinite(rows[i][j])) {
        throw ParseError("matrix entries must be finite");
      }
    }
    if (row >> trailing) {
      throw ParseError("row " + std::to_string(i + 1) + " holds extra tokens");
    }
  }

  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > kSymmetryTol) {
        throw AsymmetryError("entries (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) +
                             ") deviate from symmetry beyond 1e-9");
      }
      m(i, j) = (rows[i][j] + rows[j][i]) / 2.0;
    }
  }
  return m;
}

SymMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_matrix(in);
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_matrix(std::ostream& out, const SymMatrix& m) {
  const int n = m.order();
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << " ";
      out << format_real(m(i, j));
    }
    out << "\n";
  }
}

void save_matrix(const std::filesystem::path& path, const SymMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_matrix(out, m);
  if (!out.flush()) throw IoError("write to " + path.string() + " failed");
}

}  // namespace copangle
