#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dgc/factor.hpp"
#include "dgc/parse.hpp"
#include "factor_internal.hpp"

namespace dgc {

namespace {

void sort_factors(Factorization& f) {
    std::sort(f.factors.begin(), f.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return to_string(a.first) < to_string(b.first);
    });
}

// extract multiplicity of fac from rest by repeated exact division
int strip_multiplicity(Polynomial& rest, const Polynomial& fac) {
    int mult = 0;
    while (true) {
        auto q = rest.divide_exact(fac);
        if (!q) break;
        rest = q->scaled_to_integer().first.primitive_part();
        ++mult;
    }
    return mult;
}

// lift a univariate factorization into a chosen variable of an n-var ring
Polynomial embed_univariate(const Polynomial& uni, int nvars, int var) {
    Polynomial out(nvars);
    for (const auto& [m, c] : uni.terms()) {
        Monomial mm(nvars, 0);
        mm[var] = m[0];
        out.add_term(mm, c);
    }
    return out;
}

Factorization factor_bivariate(const Polynomial& f);

// Kronecker collapse of all variables except `main` into variable 2 of a
// bivariate ring; injective on monomials with per-variable degree < base.
Polynomial collapse_to_bivariate(const Polynomial& f, int main, int base) {
    Polynomial out(2);
    for (const auto& [m, c] : f.terms()) {
        long ye = 0, bpow = 1;
        for (int v = 0; v < f.nvars(); ++v) {
            if (v == main) continue;
            ye += m[v] * bpow;
            bpow *= base;
        }
        out.add_term(Monomial{m[main], static_cast<int>(ye)}, c);
    }
    return out;
}

Polynomial expand_from_bivariate(const Polynomial& g, int nvars, int main, int base) {
    Polynomial out(nvars);
    Monomial mm(nvars, 0);
    for (const auto& [m, c] : g.terms()) {
        mm.assign(nvars, 0);
        mm[main] = m[0];
        int rest = m[1];
        for (int v = 0; v < nvars; ++v) {
            if (v == main) continue;
            mm[v] = rest % base;
            rest /= base;
        }
        if (rest != 0) throw std::logic_error("collapse exponent overflow");
        out.add_term(mm, c);
    }
    return out;
}

// Core for n >= 3: peel irreducible factors off one at a time by factoring
// the bivariate collapse and trial-dividing recombined candidates.
Factorization factor_nvar(const Polynomial& f_in) {
    int n = f_in.nvars();
    Factorization out;
    auto [fi, lambda] = f_in.scaled_to_integer();
    Polynomial rest = fi.primitive_part();
    out.unit = f_in.leading_term().second / rest.leading_term().second;

    while (!rest.is_constant()) {
        std::vector<int> active;
        for (int v = 0; v < n; ++v)
            if (rest.degree_in(v) > 0) active.push_back(v);

        if (active.size() == 1) {
            int v = active[0];
            Polynomial uni(1);
            for (const auto& [m, c] : rest.terms()) uni.add_term(Monomial{m[v]}, c);
            Factorization uf = factor_univariate(uni);
            for (const auto& [q, mult] : uf.factors)
                out.factors.emplace_back(embed_univariate(q, n, v), mult);
            break;
        }

        int main = active[0];
        int base = 1;
        for (int v = 0; v < n; ++v)
            if (v != main) base = std::max(base, rest.degree_in(v));
        base += 1;

        Polynomial image = collapse_to_bivariate(rest, main, base);
        Factorization bf = factor_bivariate(image);
        std::vector<Polynomial> flat;
        for (const auto& [q, mult] : bf.factors)
            for (int i = 0; i < mult; ++i) flat.push_back(q);

        Polynomial found(n);
        bool have = false;
        std::set<std::string> tried;
        for (std::size_t msz = 1; msz <= flat.size() && !have; ++msz) {
            std::vector<int> pick(msz);
            for (std::size_t i = 0; i < msz; ++i) pick[i] = static_cast<int>(i);
            while (!have) {
                Polynomial prod = Polynomial::constant(2, 1);
                for (std::size_t i = 0; i < msz; ++i) prod = prod * flat[pick[i]];
                Polynomial cand = expand_from_bivariate(prod, n, main, base).primitive_part();
                std::string key = to_string(cand);
                if (!tried.count(key) && !cand.is_constant()) {
                    tried.insert(key);
                    if (rest.divide_exact(cand)) {
                        found = cand;
                        have = true;
                        break;
                    }
                }
                int pos = static_cast<int>(msz) - 1;
                while (pos >= 0 && pick[pos] == static_cast<int>(flat.size() - msz + pos)) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (std::size_t i = pos + 1; i < msz; ++i) pick[i] = pick[i - 1] + 1;
            }
        }
        if (!have) throw std::logic_error("kronecker recombination found no factor");
        int mult = strip_multiplicity(rest, found);
        out.factors.emplace_back(found, mult);
    }
    sort_factors(out);
    return out;
}

// Homogeneous fast path: dehomogenize on the last active variable, factor in
// one fewer variable, then rehomogenize each factor.
Factorization factor_homogeneous(const Polynomial& f) {
    int n = f.nvars();
    int d = f.degree();
    int last = -1;
    for (int v = n - 1; v >= 0; --v)
        if (f.degree_in(v) > 0) {
            last = v;
            break;
        }
    // substitute x_last = 1, keep remaining variables in an (n-1)-var ring
    std::vector<Polynomial> images;
    images.reserve(n);
    int idx = 1;
    for (int v = 0; v < n; ++v) {
        if (v == last)
            images.push_back(Polynomial::constant(n - 1, 1));
        else
            images.push_back(Polynomial::variable(n - 1, idx++));
    }
    Polynomial dehom = f.substitute(images);
    Factorization df = factor_polynomial(dehom);

    Factorization out;
    int used_degree = 0;
    for (const auto& [q, mult] : df.factors) {
        // rehomogenize q to its own degree with x_last
        int qd = q.degree();
        Polynomial hom(n);
        for (const auto& [m, c] : q.terms()) {
            Monomial mm(n, 0);
            int k = 0;
            for (int v = 0; v < n; ++v) {
                if (v == last) continue;
                mm[v] = m[k++];
            }
            mm[last] = qd - total_degree(m);
            hom.add_term(mm, c);
        }
        out.factors.emplace_back(hom.primitive_part(), mult);
        used_degree += qd * mult;
    }
    if (used_degree < d)
        out.factors.emplace_back(Polynomial::variable(n, last + 1), d - used_degree);
    sort_factors(out);

    // rehomogenizing can reorder leading terms, so fix the unit against f
    Polynomial prod = Polynomial::constant(n, 1);
    for (const auto& [q, mult] : out.factors) prod = prod * q.pow(static_cast<unsigned>(mult));
    out.unit = f.leading_term().second / prod.leading_term().second;
    if (out.product(n) != f) throw std::logic_error("homogeneous factorization check failed");
    return out;
}

Factorization factor_bivariate(const Polynomial& f) {
    Factorization out;
    auto [fi, lambda] = f.scaled_to_integer();
    Polynomial prim = fi.primitive_part();
    out.unit = f.leading_term().second / prim.leading_term().second;
    if (prim.is_constant()) return out;

    if (prim.degree_in(0) == 0 || prim.degree_in(1) == 0) {
        int var = prim.degree_in(0) > 0 ? 0 : 1;
        Polynomial uni(1);
        for (const auto& [m, c] : prim.terms()) uni.add_term(Monomial{m[var]}, c);
        Factorization uf = factor_univariate(uni);
        for (const auto& [q, mult] : uf.factors)
            out.factors.emplace_back(embed_univariate(q, 2, var), mult);
        sort_factors(out);
        return out;
    }

    Polynomial rest = prim;

    // content w.r.t. x1 is univariate in x2
    ZVec cont = detail::content_in_x2(rest);
    if (static_cast<int>(cont.size()) - 1 > 0) {
        Factorization cf = factor_univariate(zvec_to_poly(cont));
        for (const auto& [q, mult] : cf.factors) {
            Polynomial q2 = embed_univariate(q, 2, 1);
            int m = strip_multiplicity(rest, q2);
            if (m != mult) throw std::logic_error("content multiplicity mismatch");
            out.factors.emplace_back(q2, m);
        }
    }
    if (rest.is_constant()) {
        sort_factors(out);
        return out;
    }

    // squarefree part: rest / gcd(rest, d rest/dx1); all pure-x2 factors gone
    Polynomial dx = rest.partial_derivative(0);
    Polynomial sqf = rest;
    if (!dx.is_zero()) {
        Polynomial g = detail::bivariate_gcd(rest, dx);
        if (!g.is_constant()) {
            auto q = rest.divide_exact(g);
            if (!q) throw std::logic_error("gcd does not divide");
            sqf = q->scaled_to_integer().first.primitive_part();
        }
    }

    for (const auto& fac : detail::factor_bivariate_squarefree(sqf)) {
        int mult = strip_multiplicity(rest, fac);
        if (mult == 0) throw std::logic_error("squarefree factor does not divide");
        out.factors.emplace_back(fac, mult);
    }
    if (!rest.is_constant()) throw std::logic_error("bivariate factorization incomplete");
    sort_factors(out);
    return out;
}

}  // namespace

Factorization factor_multivariate(const Polynomial& f) {
    if (f.nvars() < 2) throw std::invalid_argument("factor_multivariate: nvars must be >= 2");
    if (f.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
    if (f.is_constant()) {
        Factorization out;
        out.unit = f.leading_term().second;
        return out;
    }
    if (f.nvars() == 2) return factor_bivariate(f);
    if (f.is_homogeneous() && f.degree() > 0) return factor_homogeneous(f);
    return factor_nvar(f);
}

Factorization factor_polynomial(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
    return f.nvars() == 1 ? factor_univariate(f) : factor_multivariate(f);
}

bool is_irreducible(const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) return false;
    Factorization fac = factor_polynomial(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

bool is_r_irreducible(const Polynomial& f, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("is_r_irreducible: nonconstant input required");
    Factorization fac = factor_polynomial(f);
    return fac.min_factor_degree() > r;
}

}  // namespace dgc
