#pragma once

#include <cstdint>
#include <string_view>

#include "fitz/field.hpp"
#include "fitz/poly.hpp"

namespace fitz {

// Polynomial expressions: terms joined by '+', each one of
//   c      c*x^e      c*x      x^e      x
// with optional whitespace. Coefficients are unsigned integers reduced mod p
// for prime fields, or bracketed little-endian vectors "[c0,c1,...]" over
// extensions. Exponents may repeat and appear in any order; repeats sum.
// Errors carry the byte position (ParseError).
Poly parse_poly(std::string_view text, const FieldPtr& spec,
                std::uint64_t max_exponent = std::uint64_t{1} << 24);

// Comma-separated coefficient list, constant term first: "1,1,0,0,1".
// Extension coefficients use the same bracketed form; commas inside
// brackets do not split.
Poly parse_coeff_list(std::string_view text, const FieldPtr& spec);

}  // namespace fitz
