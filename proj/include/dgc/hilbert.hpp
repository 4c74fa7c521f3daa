#pragma once

#include <optional>
#include <vector>

#include "dgc/polynomial.hpp"

namespace dgc {

/// One S_T observation: how many |t| <= Bprime give reducible
/// specializations, optionally which, and the configured bound value
/// C * (ln ||F|| + 1)^e * sqrt(B').
struct SpecializationReport {
    long Bprime = 0;
    long s_t = 0;
    std::optional<std::vector<long>> bad_t;
    double bound_value = 0.0;
};

/// F(t, Y...): substitute T (variable 1) by the integer t.
Polynomial specialize_T(const Polynomial& F, const Int& t);

/// True iff F(t, Y...) fails to be irreducible in Q[Y...]; zero, constants
/// and units count as reducible, so the answer is defined for every t.
bool is_reducible_specialization(const Polynomial& F, const Int& t);

/// Count (optionally collect) the reducible specializations with |t| <= B'.
SpecializationReport s_t_count(const Polynomial& F, long Bprime, bool collect,
                               double bound_C = 1.0, double bound_e = 1.0);

/// Smallest t in the order 0, 1, -1, 2, -2, ... with |t| <= t_bound making
/// every listed specialization irreducible; empty when exhausted.
std::optional<Int> find_good_t(const std::vector<Polynomial>& F_list, long t_bound);

}  // namespace dgc
