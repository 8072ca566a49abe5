#pragma once

#include <iosfwd>
#include <string>

#include "pbw/lie.hpp"

namespace pbw {

/// Algebra spec files are UTF-8 and line-oriented:
///
///   # comment
///   dim <n>
///   name <i> <string>                       (optional)
///   bracket <i> <k> : <coeff> <s> [...]     means [Xi,Xk] = sum coeff*Xs
///
/// Coefficients are integers or a/b rationals. Unspecified brackets are
/// zero. Both orientations of a pair may appear if they are consistent;
/// inconsistent duplicates are rejected. Errors carry line numbers.
BracketTable load_algebra(std::istream& in, const std::string& source_name = "<input>");

BracketTable load_algebra_file(const std::string& path);

BracketTable parse_algebra(const std::string& text, const std::string& source_name = "<string>");

/// Renders a table back into the file format (inverse of load_algebra up to
/// comments and ordering). Default "X<i>" names are omitted.
std::string algebra_text(const BracketTable& t);

} // namespace pbw
