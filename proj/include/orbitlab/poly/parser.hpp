#pragma once

#include <string>
#include <vector>

#include "orbitlab/poly/polynomial.hpp"

namespace orbitlab::poly {

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := power ('*' power)*
///   power   := '-'* primary ('^' integer)?
///   primary := integer | variable | '(' expr ')'
/// Variables are X0..XN, plus X, Y, Z, W for N <= 3.  Juxtaposition is a syntax error.
/// Throws SyntaxError, UnknownVariable or NonHomogeneous.
HomogPoly parse_polynomial(const std::string& text, std::size_t dimension);

struct ParsedFactor {
    HomogPoly poly;
    unsigned multiplicity;
};

struct ParsedProduct {
    HomogPoly expanded;
    /// The top-level '*' operands of a single-term expression (empty for sums),
    /// with powers folded into multiplicities.
    std::vector<ParsedFactor> factors;
};

/// parse_polynomial plus the explicit product structure, when the text has one.
ParsedProduct parse_with_factors(const std::string& text, std::size_t dimension);

}  // namespace orbitlab::poly
