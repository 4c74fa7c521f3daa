#include "dgc/auxiliary.hpp"

#include <cmath>
#include <stdexcept>

#include "dgc/count.hpp"
#include "dgc/qmatrix.hpp"

namespace dgc {

std::optional<AuxResult> aux_poly_for_points(const Polynomial& f,
                                             const std::vector<std::vector<Int>>& points, int k) {
    if (k < 0) throw std::invalid_argument("aux_poly: k must be non-negative");
    int n = f.nvars();
    std::vector<Monomial> cols = monomials_up_to_degree(n, k);

    QMatrix A(points.size(), cols.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        std::vector<Rat> pt(points[r].begin(), points[r].end());
        // powers per variable for this point
        std::vector<std::vector<Rat>> pows(n);
        for (int v = 0; v < n; ++v) {
            pows[v].resize(k + 1);
            pows[v][0] = 1;
            for (int e = 1; e <= k; ++e) pows[v][e] = pows[v][e - 1] * pt[v];
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Rat val = 1;
            for (int v = 0; v < n; ++v)
                if (cols[c][v] > 0) val *= pows[v][cols[c][v]];
            A.at(r, c) = val;
        }
    }

    for (const auto& vec : A.nullspace()) {
        Polynomial g(n);
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (vec[c] != 0) g.add_term(cols[c], vec[c]);
        if (g.is_zero()) continue;
        if (g.divide_exact(f)) continue;  // a multiple of f
        Polynomial gi = g.scaled_to_integer().first.primitive_part();
        AuxResult res;
        res.degree = gi.degree();
        res.g = gi;
        res.points_used = static_cast<long>(points.size());
        return res;
    }
    return std::nullopt;
}

std::optional<AuxResult> aux_poly(const Polynomial& f, long B, int k) {
    return aux_poly_for_points(f, enumerate_points(f, B), k);
}

std::optional<int> min_aux_degree(const Polynomial& f, long B, int k_max) {
    auto points = enumerate_points(f, B);
    for (int k = 0; k <= k_max; ++k)
        if (aux_poly_for_points(f, points, k)) return k;
    return std::nullopt;
}

double prop21_bound(int d, int n, long B, double C) {
    if (d < 2 || n < 1 || B < 2) throw std::invalid_argument("prop21_bound: d >= 2, n >= 1, B >= 2");
    double dd = static_cast<double>(d);
    double exponent = 1.0 / std::pow(dd, 1.0 / n);
    return C * std::pow(dd, 4.0 - 1.0 / n) * std::pow(static_cast<double>(B), exponent) *
           std::log(static_cast<double>(B));
}

}  // namespace dgc
