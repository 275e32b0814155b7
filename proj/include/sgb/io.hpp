// Text input format and polynomial rendering.
//
// Input files (format v1):
//   ring: p=<prime> vars=<v1,...,vn> order=<grevlex|lex>
//   <one polynomial per nonempty line; '#' starts a comment>
//
// Polynomial grammar: terms joined by '+'/'-'; a term is an optional integer
// coefficient and '*'-joined powers `v^k` or `v`; bare integers are constant
// terms.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgb/polynomial.hpp"

namespace sgb {

struct InputSystem {
  Ring ring;
  std::vector<std::string> varnames;
  std::vector<Polynomial> polys;
};

// Parses a whole input file; throws ParseError with 1-based line/column on
// syntax errors, unknown variables, or a non-prime modulus.
InputSystem parse_input(std::string_view text);

struct PrintOptions {
  // Render coefficients above p/2 through subtraction ("- 3" instead of
  // "+ 32000"); the parser accepts both forms.
  bool symmetric_coeffs = true;
};

std::string format_monomial(const Monomial& m, const std::vector<std::string>& varnames);
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& varnames,
                              const PrintOptions& opt = {});
std::string format_header(const Ring& ring, const std::vector<std::string>& varnames);

}  // namespace sgb
