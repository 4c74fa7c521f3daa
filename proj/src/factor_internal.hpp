#pragma once

#include <vector>

#include "dgc/polynomial.hpp"
#include "dgc/upoly.hpp"

namespace dgc::detail {

// internal pieces shared between the factorization translation units

// gcd of the x2-coefficient polynomials of f (the content w.r.t. x1)
ZVec content_in_x2(const Polynomial& f);

// primitive-PRS gcd of two nonzero integer bivariate polynomials
Polynomial bivariate_gcd(Polynomial a, Polynomial b);

// Hensel core: s primitive, squarefree, deg_x1 >= 1, no factor free of x1
std::vector<Polynomial> factor_bivariate_squarefree(const Polynomial& s);

}  // namespace dgc::detail
