#pragma once

// Text matrix format:
//
//   # comment lines start with '#'
//   field F5            (or: field Q)
//   3 3
//   2 0 0
//   1 1 0
//   1 0 1
//
// Entries are whitespace separated: integers for F_p, integers or a/b for Q.
// A file may hold several "r c" blocks after one field header; a tuple of
// reflections for check-reduced is written that way.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reflen/linalg.hpp"

namespace reflen {

struct MatrixFile {
  Field field;
  std::vector<Matrix> matrices;
};

/// Parses one field header followed by one or more matrix blocks. Errors are
/// Errc::Parse with the offending line number in the message.
MatrixFile parse_matrix_file(std::istream& in);
MatrixFile parse_matrix_file(std::string_view text);
/// As parse_matrix_file, but requires exactly one block.
Matrix parse_matrix(std::string_view text);

void write_matrix_file(std::ostream& out, Field field, std::span<const Matrix> matrices);
std::string format_matrix_file(Field field, std::span<const Matrix> matrices);

}  // namespace reflen
