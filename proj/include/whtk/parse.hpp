#pragma once

#include <string>
#include <vector>

#include "whtk/ratmat.hpp"

namespace whtk {

/// Square grid of rational-function expression strings, the textual input of
/// the command-line tools.
struct InputDocument {
    int size = 0;
    std::vector<std::vector<std::string>> entries;
};

/// Parses an expression over the tokens RATIONAL ("a" or "a/b"), IMAGINARY
/// ("i" suffix), VARIABLE ("z"), operators + - * / ^ and parentheses, with
/// precedence ^ > * / > binary +-.  Whitespace-insensitive.  Throws
/// ParseError (with the offending offset) on malformed input.
RationalFunction parse_rational_function(const std::string& text);

/// Same grammar; additionally requires the result to be a polynomial.
Polynomial parse_polynomial(const std::string& text);

/// Parses every entry and assembles the matrix function.  Throws ParseError
/// for a non-square grid or a malformed entry, SingularMatrix when the
/// determinant is identically zero.
RatMatFun parse_matrix(const InputDocument& doc);

}  // namespace whtk
