// Absolute irreducibility for bivariate polynomials via the Ruppert
// criterion: f squarefree is absolutely irreducible iff the space of pairs
// (g, h) with (g dx + h dy)/f closed, i.e.
//
//     f * dg/dy - g * df/dy  =  f * dh/dx - h * df/dx,
//
// under the degree constraints deg_x g <= m-1, deg_y g <= n, deg_x h <= m,
// deg_y h <= n-1 (m = deg_x f, n = deg_y f) has dimension one; in general
// the dimension equals the number of absolutely irreducible factors.
//
// Layout: columns are the g-basis monomials in grlex order followed by the
// h-basis monomials in grlex order; rows are the monomials of the expanded
// identity, in grlex order.

#include <map>
#include <stdexcept>

#include "dgc/factor.hpp"
#include "dgc/qmatrix.hpp"
#include "factor_internal.hpp"

namespace dgc {

namespace {

bool monomial_in_box(const Monomial& m, int dx, int dy) {
    return m[0] <= dx && m[1] <= dy;
}

std::vector<Monomial> box_monomials(int dx, int dy) {
    std::vector<Monomial> out;
    for (int total = 0; total <= dx + dy; ++total)
        for (int a = 0; a <= dx; ++a) {
            int b = total - a;
            if (b >= 0 && b <= dy) out.push_back(Monomial{a, b});
        }
    return out;
}

}  // namespace

int absolute_factor_count_bivariate(const Polynomial& f) {
    if (f.nvars() != 2) throw std::invalid_argument("bivariate input required");
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("nonconstant input required");
    int m = f.degree_in(0), n = f.degree_in(1);
    if (m == 0) return n;  // squarefree univariate splits into distinct linear factors
    if (n == 0) return m;

    Polynomial fx = f.partial_derivative(0);
    Polynomial fy = f.partial_derivative(1);

    std::vector<Monomial> gcols = box_monomials(m - 1, n);
    std::vector<Monomial> hcols = box_monomials(m, n - 1);

    // column polynomial for a g-basis monomial: f * d(mon)/dy - mon * fy
    // column polynomial for an h-basis monomial: mon * fx - f * d(mon)/dx
    std::vector<Polynomial> cols;
    cols.reserve(gcols.size() + hcols.size());
    for (const auto& mon : gcols) {
        Polynomial p = Polynomial::from_term(2, mon, Rat(1));
        cols.push_back(f * p.partial_derivative(1) - p * fy);
    }
    for (const auto& mon : hcols) {
        Polynomial p = Polynomial::from_term(2, mon, Rat(1));
        cols.push_back(p * fx - f * p.partial_derivative(0));
    }

    std::map<Monomial, std::size_t, GrlexLess> row_index;
    for (const auto& col : cols)
        for (const auto& [mon, c] : col.terms())
            row_index.emplace(mon, 0);
    std::size_t r = 0;
    for (auto& [mon, idx] : row_index) idx = r++;

    QMatrix A(row_index.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [mon, c] : cols[j].terms()) A.at(row_index[mon], j) = c;

    return static_cast<int>(cols.size() - A.rank());
}

bool is_absolutely_irreducible_bivariate(const Polynomial& f) {
    if (f.nvars() != 2) throw std::invalid_argument("bivariate input required");
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("nonconstant input required");

    // squarefree precondition: gcd(f, df/dx, df/dy) must be constant
    Polynomial fi = f.scaled_to_integer().first.primitive_part();
    Polynomial g = fi;
    for (int v : {0, 1}) {
        Polynomial d = fi.partial_derivative(v);
        if (d.is_zero()) continue;
        g = detail::bivariate_gcd(g, d);
    }
    if (!g.is_constant()) throw std::invalid_argument("input is not squarefree");

    if (!is_irreducible(fi))
        throw std::invalid_argument("input is reducible over Q; factor first");

    if (fi.degree() == 1) return true;
    return absolute_factor_count_bivariate(fi) == 1;
}

}  // namespace dgc
