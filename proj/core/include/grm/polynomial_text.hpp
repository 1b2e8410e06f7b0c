#pragma once

#include <string>
#include <string_view>

#include "grm/function_space.hpp"

namespace grm {

// Text form of polynomials:
//
//   poly   := term ('+' term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'x' INDEX ('^' EXP)?   |   ('x' | 'y' | 'z') ('^' EXP)?
//
// Variables are x1..xm; the aliases x, y, z stand for x1, x2, x3 and are only
// accepted when m <= 3. Coefficients are integer element codes. Whitespace is
// ignored. Exponents may exceed q - 1; the raw result keeps them unfolded.
//
// Throws std::invalid_argument with the offending position on malformed input.
RawPolynomial parse_raw_polynomial(std::string_view text, Field field, int m);

ReducedPolynomial parse_polynomial(std::string_view text, Field field, int m);

// Canonical text: terms in listing order (degree, then exponent tuple with
// variable 1 most significant), unit coefficients omitted, "0" for zero.
// Uses x, y, z when m <= 3 and x1..xm otherwise.
std::string format_polynomial(const ReducedPolynomial& p);

}  // namespace grm
