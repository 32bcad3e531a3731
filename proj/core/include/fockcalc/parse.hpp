#pragma once

// Text forms for symbols and polynomials. The grammar is a sum of
// signed terms; a term multiplies coefficient atoms (rationals, i,
// parenthesized complex literals) with factors z^p, zb^n and the
// |z|^2s shorthand. "zb" is the conjugate variable; the two-byte
// combining-macron spelling of a barred z is accepted as an alias.

#include <fockcalc/poly.hpp>
#include <fockcalc/symbol.hpp>

#include <stdexcept>
#include <string>

namespace fockcalc {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int position)
        : std::runtime_error(message), position_(position) {}

    // 1-based byte offset of the offending character.
    int position() const { return position_; }

  private:
    int position_;
};

MixedSymbol parse_symbol(const std::string& text);
// Same grammar, but conjugate factors are rejected.
AnalyticPoly parse_poly(const std::string& text);

// Canonical forms: terms ascending, '*' separators, unit real
// coefficients dropped, nonreal coefficients parenthesized. Both
// printers round-trip through the parsers exactly.
std::string print_symbol(const MixedSymbol& s);
std::string print_poly(const AnalyticPoly& f);

}  // namespace fockcalc
