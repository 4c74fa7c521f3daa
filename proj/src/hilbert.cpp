#include "dgc/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "dgc/factor.hpp"
#include "dgc/upoly.hpp"

namespace dgc {

namespace {

// reducibility of a univariate integer polynomial, with closed forms for
// the degrees that dominate the t-sweeps
bool zvec_reducible(const ZVec& g_in) {
    ZVec g = zv_primitive(g_in);
    int d = static_cast<int>(g.size()) - 1;
    if (d <= 0) return true;  // zero or unit
    if (d == 1) return false;
    if (d == 2) {
        Int disc = g[1] * g[1] - 4 * g[2] * g[0];
        return is_perfect_square(disc);
    }
    Factorization fac = factor_univariate(zvec_to_poly(g));
    return fac.factors.size() > 1 || fac.factors[0].second > 1;
}

bool poly_reducible_in_y(const Polynomial& g) {
    if (g.is_zero() || g.is_constant()) return true;
    if (g.nvars() == 1) {
        QVec q = poly_to_qvec(g);
        return zvec_reducible(uv_primitive(q));
    }
    Factorization fac = factor_multivariate(g);
    return fac.factors.size() > 1 || fac.factors[0].second > 1;
}

}  // namespace

Polynomial specialize_T(const Polynomial& F, const Int& t) {
    if (F.is_zero()) throw std::invalid_argument("specialize_T: nonzero input required");
    if (F.nvars() < 2) throw std::invalid_argument("specialize_T: need T plus Y variables");
    return F.specialize_var(0, Rat(t));
}

bool is_reducible_specialization(const Polynomial& F, const Int& t) {
    return poly_reducible_in_y(specialize_T(F, t));
}

SpecializationReport s_t_count(const Polynomial& F, long Bprime, bool collect, double bound_C,
                               double bound_e) {
    if (Bprime < 0) throw std::invalid_argument("Bprime must be non-negative");
    if (F.is_zero()) throw std::invalid_argument("s_t_count: nonzero input required");
    SpecializationReport rep;
    rep.Bprime = Bprime;
    if (collect) rep.bad_t.emplace();

    int n_y = F.nvars() - 1;
    if (n_y == 1) {
        // fast path: F = sum_j T^j * F_j(Y) with integer vectors, so each
        // specialization is an accumulation, not a substitution
        auto [Fi, lambda] = F.scaled_to_integer();
        int dT = Fi.degree_in(0);
        std::vector<ZVec> slices(dT + 1);
        for (const auto& [m, c] : Fi.terms()) {
            auto& vec = slices[m[0]];
            if (static_cast<int>(vec.size()) <= m[1]) vec.resize(m[1] + 1, Int(0));
            vec[m[1]] = c.get_num();
        }
        ZVec g;
        for (long t = -Bprime; t <= Bprime; ++t) {
            g.clear();
            Int tp = 1;
            for (int j = 0; j <= dT; ++j) {
                if (!slices[j].empty()) {
                    if (g.size() < slices[j].size()) g.resize(slices[j].size(), Int(0));
                    for (std::size_t i = 0; i < slices[j].size(); ++i) g[i] += tp * slices[j][i];
                }
                tp *= t;
            }
            while (!g.empty() && g.back() == 0) g.pop_back();
            if (zvec_reducible(g)) {
                ++rep.s_t;
                if (collect) rep.bad_t->push_back(t);
            }
        }
    } else {
        for (long t = -Bprime; t <= Bprime; ++t) {
            if (is_reducible_specialization(F, Int(t))) {
                ++rep.s_t;
                if (collect) rep.bad_t->push_back(t);
            }
        }
    }

    double logh = std::log(F.height().get_d());
    rep.bound_value = bound_C * std::pow(logh + 1.0, bound_e) * std::sqrt(static_cast<double>(Bprime));
    return rep;
}

std::optional<Int> find_good_t(const std::vector<Polynomial>& F_list, long t_bound) {
    if (F_list.empty()) throw std::invalid_argument("find_good_t: empty list");
    if (t_bound < 0) throw std::invalid_argument("t_bound must be non-negative");
    for (long t = 0; std::abs(t) <= t_bound; t = t > 0 ? -t : -t + 1) {
        bool all_good = true;
        for (const auto& F : F_list)
            if (is_reducible_specialization(F, Int(t))) {
                all_good = false;
                break;
            }
        if (all_good) return Int(t);
    }
    return std::nullopt;
}

}  // namespace dgc
