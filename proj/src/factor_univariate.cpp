#include <algorithm>
#include <stdexcept>

#include "dgc/factor.hpp"
#include "dgc/modpoly.hpp"
#include "dgc/parse.hpp"
#include "dgc/upoly.hpp"

namespace dgc {

namespace {

// Zassenhaus recombination: given s (primitive, squarefree, deg >= 1) and
// its monic factorization mod p as integer vectors, peel off true factors by
// trying subset products lifted to the symmetric range.
std::vector<ZVec> recombine(ZVec s, std::vector<ZVec> modular, const Int& p) {
    std::vector<ZVec> out;
    ZpBig ring{p};
    ModPoly<ZpBig> mp(ring);
    Int half = p / 2;

    auto lift_subset = [&](const std::vector<int>& subset) {
        ModPoly<ZpBig>::Vec prod{ring.from_int(s.back())};
        for (int idx : subset) prod = mp.mul(prod, mp.from_zvec(modular[idx]));
        ZVec cand(prod.size());
        for (std::size_t i = 0; i < prod.size(); ++i) {
            Int c = prod[i];
            if (c > half) c -= p;
            cand[i] = c;
        }
        return zv_primitive(cand);
    };

    std::size_t m = 1;
    while (2 * m <= modular.size()) {
        bool found = false;
        std::vector<int> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            ZVec cand = lift_subset(idx);
            if (static_cast<int>(cand.size()) - 1 >= 1) {
                auto [q, r] = uv_divmod(to_qvec(s), to_qvec(cand));
                if (r.empty()) {
                    out.push_back(cand);
                    s = uv_primitive(q);
                    std::vector<ZVec> remaining;
                    for (std::size_t i = 0, j = 0; i < modular.size(); ++i) {
                        if (j < idx.size() && static_cast<int>(i) == idx[j])
                            ++j;
                        else
                            remaining.push_back(modular[i]);
                    }
                    modular = std::move(remaining);
                    found = true;
                    break;
                }
            }
            // next m-subset in lexicographic order
            int pos = static_cast<int>(m) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(modular.size() - m + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++m;
    }
    if (static_cast<int>(s.size()) - 1 >= 1) out.push_back(zv_primitive(s));
    return out;
}

// Complete factorization of a primitive squarefree integer polynomial of
// degree >= 1 into primitive irreducibles.
std::vector<ZVec> factor_squarefree(const ZVec& s) {
    int d = static_cast<int>(s.size()) - 1;
    if (d == 1) return {s};

    Int p = 2 * zv_factor_coeff_bound(s) + 1;
    for (int tries = 0; tries < 200; ++tries) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (s.back() % p == 0) continue;
        ZpBig ring{p};
        ModPoly<ZpBig> mp(ring);
        auto fp = mp.from_zvec(s);
        if (!mp.is_squarefree(fp)) continue;

        SplitMix64 rng(0xFAC70ULL);
        auto modular_monic = mp.factor_squarefree_monic(fp, rng);
        std::vector<ZVec> modular;
        for (auto& g : modular_monic) {
            ZVec z(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) z[i] = g[i];
            modular.push_back(std::move(z));
        }
        std::sort(modular.begin(), modular.end());
        if (modular.size() == 1) return {s};
        return recombine(s, std::move(modular), p);
    }
    throw std::logic_error("could not find a usable prime for factorization");
}

}  // namespace

Polynomial Factorization::product(int nvars) const {
    Polynomial r = Polynomial::constant(nvars, unit);
    for (const auto& [f, mult] : factors) r = r * f.pow(static_cast<unsigned>(mult));
    return r;
}

int Factorization::min_factor_degree() const {
    if (factors.empty()) throw std::invalid_argument("no factors");
    int d = factors.front().first.degree();
    for (const auto& [f, mult] : factors) d = std::min(d, f.degree());
    return d;
}

Factorization factor_univariate(const Polynomial& f) {
    if (f.nvars() != 1) throw std::invalid_argument("factor_univariate: nvars must be 1");
    if (f.is_zero()) throw std::invalid_argument("factor of the zero polynomial");

    QVec q = poly_to_qvec(f);
    ZVec prim = uv_primitive(q);
    Factorization out;
    out.unit = q.back() / Rat(prim.back());

    if (static_cast<int>(prim.size()) - 1 == 0) return out;

    ZVec deriv = uv_primitive(uv_derivative(to_qvec(prim)));
    ZVec g = zv_gcd(prim, deriv);
    ZVec sqf = uv_primitive(uv_divmod(to_qvec(prim), to_qvec(g)).first);

    auto irreducibles = factor_squarefree(sqf);

    ZVec rest = prim;
    for (const auto& fac : irreducibles) {
        int mult = 0;
        while (true) {
            auto [quot, rem] = uv_divmod(to_qvec(rest), to_qvec(fac));
            if (!rem.empty()) break;
            rest = uv_primitive(quot);
            ++mult;
        }
        out.factors.emplace_back(zvec_to_poly(fac), mult);
    }
    if (static_cast<int>(rest.size()) - 1 != 0)
        throw std::logic_error("univariate factorization did not exhaust the input");

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return to_string(a.first) < to_string(b.first);
    });
    return out;
}

}  // namespace dgc
