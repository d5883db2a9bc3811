#pragma once

#include <string>
#include <string_view>

#include "permdist/code.hpp"
#include "permdist/matgf.hpp"

namespace permdist {

// Line-oriented ASCII matrix format; '#' starts a comment, blank lines are
// ignored:
//
//   field p=<int> m=<int> [modulus=<c0,c1,...,cm>]
//   matrix k=<int> n=<int>
//   <k lines of n space-separated element encodings>
//
// A missing modulus selects the default for (p, m).

/// Throws ParseError (with the offending line) on syntax, range or field errors.
Matrix parse_matrix_file(std::string_view text);

/// parse_matrix_file followed by code validation (rank k, k < n); validation
/// failures are reported as ParseError on the matrix header line.
LinearCode parse_code_file(std::string_view text);

/// Canonical form: single spaces, LF endings, modulus written iff m > 1.
std::string emit_matrix_file(const Matrix& m);

LinearCode read_code_file(const std::string& path);

}  // namespace permdist
