#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "fpde/exp_poly.hpp"

namespace fpde {

enum class DiagnosticKind {
  syntax,
  non_polynomial_exponent,
  numeric_literal_overflow,
};

const char* to_string(DiagnosticKind k);

struct ParseDiagnostic {
  std::size_t position = 0;  // byte offset into the source
  std::string message;
  DiagnosticKind kind = DiagnosticKind::syntax;
};

using ParseResult = std::variant<ExpPoly, ParseDiagnostic>;

// Total: never throws on malformed input, returns a diagnostic instead.
//
// Grammar (whitespace insignificant):
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      division: constants only
//   factor := atom ('^' uint)?
//   atom   := number 'i'? | 'i' | 'z1' | 'z2'
//           | 'exp' '(' expr ')'              argument must be polynomial
//           | '(' expr ')'
ParseResult parse_expr(std::string_view src);

// Parses a constant expression ("1+2i", "-3", "0.5i", "(1+2i)/4", ...).
std::variant<Cx, ParseDiagnostic> parse_complex(std::string_view src);

// Shortest round-trip decimal form; parse_expr(format_expr(f)) rebuilds f
// with representation equality. The zero function prints as "0".
std::string format_expr(const ExpPoly& f);
std::string format_poly(const Poly2& p);
std::string format_complex(Cx v);
std::string format_real(double v);

}  // namespace fpde
