#pragma once

#include <optional>
#include <vector>

#include "dgc/polynomial.hpp"

namespace dgc {

/// An auxiliary polynomial for (f, B): vanishes at every integer point of
/// V(f) in the box but is not divisible by f.
struct AuxResult {
    int degree = 0;
    Polynomial g;
    long points_used = 0;

    AuxResult() : g(1) {}
};

/// Smallest-degree-k construction: nullspace of the evaluation matrix of the
/// degree <= k monomials at the box points of V(f), with the first basis
/// element not divisible by f returned (integer coefficients, primitive).
/// none when every vanishing polynomial of degree <= k is a multiple of f.
std::optional<AuxResult> aux_poly(const Polynomial& f, long B, int k);

/// Same, against a precomputed point set (the incremental search path).
std::optional<AuxResult> aux_poly_for_points(const Polynomial& f,
                                             const std::vector<std::vector<Int>>& points, int k);

/// Smallest k <= k_max with aux_poly nonempty; points enumerated once.
std::optional<int> min_aux_degree(const Polynomial& f, long B, int k_max);

/// Comparator C * d^(4 - 1/n) * B^(1/d^(1/n)) * ln B.
double prop21_bound(int d, int n, long B, double C);

}  // namespace dgc
