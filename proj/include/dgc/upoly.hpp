#pragma once

#include <optional>
#include <vector>

#include "dgc/numeric.hpp"
#include "dgc/polynomial.hpp"

namespace dgc {

// Dense univariate polynomials, coefficient of x^i at index i, no trailing
// zeros after trim. QVec over Q, ZVec over Z. These are the workhorses of
// factorization; the sparse Polynomial stays the public carrier.
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

void uv_trim(QVec& f);
int uv_degree(const QVec& f);  // -1 for zero

QVec uv_add(const QVec& a, const QVec& b);
QVec uv_sub(const QVec& a, const QVec& b);
QVec uv_mul(const QVec& a, const QVec& b);
QVec uv_scale(const QVec& a, const Rat& c);

/// Division with remainder over Q; divisor nonzero.
std::pair<QVec, QVec> uv_divmod(const QVec& a, const QVec& b);

/// Monic gcd over Q.
QVec uv_gcd(QVec a, QVec b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct UvExtGcd {
    QVec g, s, t;
};
UvExtGcd uv_ext_gcd(const QVec& a, const QVec& b);

QVec uv_derivative(const QVec& f);
Rat uv_eval(const QVec& f, const Rat& x);

/// Clear denominators and remove integer content; sign fixed so the leading
/// coefficient is positive. Zero input stays zero.
ZVec uv_primitive(const QVec& f);

Int zv_content(const ZVec& f);
ZVec zv_primitive(const ZVec& f);
/// gcd over Z of primitive inputs (primitive PRS), result primitive with
/// positive leading coefficient.
ZVec zv_gcd(ZVec a, ZVec b);
Int zv_eval(const ZVec& f, const Int& x);

QVec to_qvec(const ZVec& f);
QVec poly_to_qvec(const Polynomial& f);          // nvars == 1
Polynomial qvec_to_poly(const QVec& f);          // into nvars == 1
Polynomial zvec_to_poly(const ZVec& f);

/// Upper bound on |coefficients| of lc(f) * (any monic-normalized factor
/// of f): |lc(f)| * 2^deg(f) * ceil(||f||_2). Mignotte-style, deliberately
/// generous.
Int zv_factor_coeff_bound(const ZVec& f);

/// Integer roots of a nonzero integer polynomial lying in [-B, B], sorted
/// ascending. Uses root finding modulo a prime exceeding 2B+1, then exact
/// confirmation, so it stays fast when coefficients are huge.
std::vector<Int> integer_roots_in_box(const ZVec& f, const Int& B);

}  // namespace dgc
