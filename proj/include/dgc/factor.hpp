#pragma once

#include <vector>

#include "dgc/polynomial.hpp"

namespace dgc {

/// Complete factorization over Q: input = unit * prod factors[i]^mult[i],
/// each factor irreducible over Q, primitive with integer coefficients and
/// positive grlex-leading coefficient; factors pairwise non-associate and
/// sorted by (degree, canonical print).
struct Factorization {
    Rat unit = 1;
    std::vector<std::pair<Polynomial, int>> factors;

    Polynomial product(int nvars) const;
    int min_factor_degree() const;  // throws if no factors
};

/// f nonzero with nvars == 1.
Factorization factor_univariate(const Polynomial& f);

/// f nonzero with nvars >= 2. Reduces to bivariate by Kronecker collapse of
/// all variables but one, then to univariate factorization plus lifting; all
/// candidate recombinations are validated by exact trial division.
Factorization factor_multivariate(const Polynomial& f);

/// Dispatch on nvars.
Factorization factor_polynomial(const Polynomial& f);

/// True iff f is nonconstant and has a single irreducible factor with
/// multiplicity one (i.e. irreducible up to a unit).
bool is_irreducible(const Polynomial& f);

/// True iff every irreducible factor of f over Q has degree > r.
/// f must be nonconstant, r >= 1.
bool is_r_irreducible(const Polynomial& f, int r);

/// Number of absolutely irreducible factors of a squarefree bivariate f,
/// computed as the nullspace dimension of the Ruppert closedness system for
/// the differential form (g dx + h dy)/f. No factorization is performed.
int absolute_factor_count_bivariate(const Polynomial& f);

/// Ruppert criterion for a bivariate f that is squarefree and irreducible
/// over Q: true iff f stays irreducible over the algebraic closure.
/// Throws if f is not squarefree or not irreducible over Q.
bool is_absolutely_irreducible_bivariate(const Polynomial& f);

}  // namespace dgc
