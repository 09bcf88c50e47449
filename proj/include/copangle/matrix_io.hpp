#ifndef COPANGLE_MATRIX_IO_HPP
#define COPANGLE_MATRIX_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "copangle/sym_matrix.hpp"

namespace copangle {

/// Plain-text matrix format: first non-comment line holds the order n, the
/// next n such lines hold n whitespace-separated reals each. Blank lines
/// and lines starting with '#' are ignored. The parsed matrix must be
/// symmetric within 1e-9 (AsymmetryError beyond that) and is symmetrized by
/// averaging. Throws ParseError on malformed input, IoError on read
/// failure.
SymMatrix load_matrix(const std::filesystem::path& path);
SymMatrix parse_matrix(std::istream& in);

/// Writes the format above with 17 significant digits, so a written matrix
/// re-loads bit-identically.
void save_matrix(const std::filesystem::path& path, const SymMatrix& m);
void write_matrix(std::ostream& out, const SymMatrix& m);

/// Shortest-width decimal with 17 significant digits.
std::string format_real(double value);

}  // namespace copangle

#endif  // COPANGLE_MATRIX_IO_HPP
