#pragma once

#include <optional>
#include <vector>

#include "dgc/linear_form.hpp"
#include "dgc/polynomial.hpp"

namespace dgc {

/// Witness that f is cylindrical over a curve: substituting
/// (ell1(x), ell2(x)) into g reproduces f exactly. ell2 may be unused by g
/// when the partial-derivative span has dimension one.
struct CylinderCertificate {
    LinearForm ell1, ell2;
    Polynomial g;  // bivariate

    bool verifies(const Polynomial& f) const;
};

/// Hyperplane slice data: restrict to { ell(x) = t * ellPrime(x) + b }.
struct SliceSpec {
    LinearForm ell, ellPrime;
    Int t;
    Rat b;
};

/// Dimension of the Q-span of the n partial derivatives of f.
int partials_span_dim(const Polynomial& f);

/// Characteristic-zero criterion: f (nvars >= 3, nonconstant) is not
/// cylindrical over a curve iff its partials span a space of dimension >= 3.
bool is_ncc(const Polynomial& f);

/// Constructive converse: none when is_ncc(f); otherwise a verified
/// certificate obtained by a kernel-basis change of coordinates.
std::optional<CylinderCertificate> extract_cylinder(const Polynomial& f);

/// Restrict f to the hyperplane ell(x) = t*ellPrime(x) + b, eliminating one
/// variable by an integral change of coordinates (unimodular-extendable), so
/// integral points correspond exactly. Result lives in nvars-1 variables.
Polynomial slice(const Polynomial& f, const SliceSpec& s);

struct GoodSlice {
    SliceSpec spec;            // b is left at 0
    std::vector<Int> bad_b;    // sampled b where the slice is not NCC
    long candidates_tried = 0;
};

/// Search linearly independent ell, ellPrime and integer t, in increasing
/// height with fixed tie-breaks, until the sliced top form is r-irreducible
/// and some sampled b gives an NCC slice. Throws search_exhausted when no
/// candidate within height_bound works.
GoodSlice find_good_slice(const Polynomial& f, int r, int height_bound, int b_samples);

/// All primitive forms of the given dimension with height exactly h, first
/// nonzero coefficient positive, in the canonical search order (later
/// variables first). Exposed for the deterministic searches and tests.
std::vector<LinearForm> primitive_forms_of_height(int nvars, int h);

}  // namespace dgc
