#pragma once

#include <string>

#include "pbw/freepoly.hpp"
#include "pbw/lie.hpp"

namespace pbw {

/// Expression grammar (whitespace insensitive, '*' mandatory between
/// factors, '^' binds tighter than '*' binds tighter than '+'/'-', unary
/// minus reads as 0 - term):
///
///   expr      := ['-'] term (('+'|'-') term)*
///   term      := factor ('*' factor)*
///   factor    := atom ('^' nat)?
///   atom      := rational | generator | '[' expr ',' expr ']' | '(' expr ')'
///   generator := declared name | 'X' nat
///   rational  := int ('/' posint)?
///
/// The bracket form requires both operands to be degree-1 homogeneous and
/// expands through the table's structure constants.
struct ParsedExpression {
    std::string source;
    FreePoly poly;
};

/// Parses against an algebra: declared names resolve first, then X<k>.
/// Syntax errors carry 1-based column positions.
ParsedExpression parse_expression(const std::string& text, const BracketTable& context);

/// Context-free parse: only X<k> generators, brackets rejected; the
/// generator count is the largest index mentioned (at least 1).
ParsedExpression parse_expression(const std::string& text);

/// Context-free parse over exactly gen_count generators.
ParsedExpression parse_expression(const std::string& text, int gen_count);

} // namespace pbw
