#pragma once

#include <stdexcept>
#include <string>

#include "dgc/polynomial.hpp"

namespace dgc {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// Parse the polynomial grammar: integer or rational literals (`a`, `a/b`),
/// variables `x<k>` with 1-based index <= nvars, operators + - * ^ and
/// parentheses; ^ binds tighter than * binds tighter than +/-; unary minus
/// allowed; whitespace insignificant.
Polynomial parse_poly(const std::string& text, int nvars);

/// Canonical form: terms in grlex-descending order, explicit `*`, `^` only
/// for exponents > 1, coefficient 1 omitted next to a variable.
/// parse_poly(to_string(f)) == f.
std::string to_string(const Polynomial& f);

}  // namespace dgc
