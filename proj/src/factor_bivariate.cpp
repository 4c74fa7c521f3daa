// Bivariate factorization over Q: factor a squarefree primitive polynomial
// by factoring a good specialization x2 = y0 and Hensel-lifting the
// univariate factors (y - y0)-adically, then recombining subsets with exact
// trial division. n >= 3 variables reduce to this by Kronecker collapse.

#include <algorithm>
#include <stdexcept>

#include "dgc/factor.hpp"
#include "dgc/parse.hpp"
#include "dgc/upoly.hpp"

namespace dgc {

namespace detail {

// ---- truncated series-in-t polynomials-in-x: TS[j] = t-expansion of the
// coefficient of x^j, every t-vector truncated below t^K.

using TS = std::vector<QVec>;

namespace {

void qv_truncate(QVec& v, int K) {
    if (static_cast<int>(v.size()) > K) v.resize(K);
    uv_trim(v);
}

QVec qv_mul_trunc(const QVec& a, const QVec& b, int K) {
    QVec r = uv_mul(a, b);
    qv_truncate(r, K);
    return r;
}

void ts_trim(TS& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
}

int ts_deg_x(const TS& f) { return static_cast<int>(f.size()) - 1; }

TS ts_mul(const TS& a, const TS& b, int K) {
    if (a.empty() || b.empty()) return {};
    TS r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            r[i + j] = uv_add(r[i + j], qv_mul_trunc(a[i], b[j], K));
        }
    }
    ts_trim(r);
    return r;
}

TS ts_add(const TS& a, const TS& b) {
    TS r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = uv_add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = uv_add(r[i], b[i]);
    ts_trim(r);
    return r;
}

TS ts_sub(const TS& a, const TS& b) {
    TS r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = uv_add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = uv_sub(r[i], b[i]);
    ts_trim(r);
    return r;
}

bool ts_is_zero(const TS& a) {
    for (const auto& c : a)
        if (!c.empty()) return false;
    return true;
}

// division by a monic-in-x divisor (top coefficient exactly {1})
std::pair<TS, TS> ts_divmod_monic(TS a, const TS& b, int K) {
    int db = ts_deg_x(b);
    if (db < 0 || b.back() != QVec{Rat(1)})
        throw std::logic_error("ts_divmod_monic: divisor not monic");
    ts_trim(a);
    TS q;
    if (ts_deg_x(a) >= db) q.resize(a.size() - b.size() + 1);
    while (ts_deg_x(a) >= db) {
        int k = ts_deg_x(a) - db;
        QVec c = a.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i)
            a[k + i] = uv_sub(a[k + i], qv_mul_trunc(c, b[i], K));
        ts_trim(a);
    }
    return {q, a};
}

TS ts_scale_series(const TS& a, const QVec& s, int K) {
    TS r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = qv_mul_trunc(a[i], s, K);
    ts_trim(r);
    return r;
}

// 1/L mod t^K for L with nonzero constant term
QVec series_inverse(const QVec& L, int K) {
    if (L.empty() || L[0] == 0) throw std::logic_error("series_inverse: not a unit");
    QVec inv(K, Rat(0));
    inv[0] = Rat(1) / L[0];
    for (int n = 1; n < K; ++n) {
        Rat acc = 0;
        for (int i = 1; i <= n && i < static_cast<int>(L.size()); ++i)
            acc += L[i] * inv[n - i];
        inv[n] = -acc / L[0];
    }
    uv_trim(inv);
    return inv;
}

TS qvec_to_ts(const QVec& u) {
    TS r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) r[i] = QVec{u[i]};
    ts_trim(r);
    return r;
}

struct HenselPair {
    TS G, H, S, T;
};

// One quadratic Hensel step: precision r -> r2 for F = G * H (all monic in
// x) with Bezout pair S*G + T*H = 1.
void hensel_step(const TS& F, HenselPair& p, int r2) {
    TS e = ts_sub(F, ts_mul(p.G, p.H, r2));
    if (!ts_is_zero(e)) {
        auto [q, rem] = ts_divmod_monic(ts_mul(p.S, e, r2), p.H, r2);
        p.G = ts_add(p.G, ts_add(ts_mul(p.T, e, r2), ts_mul(q, p.G, r2)));
        p.H = ts_add(p.H, rem);
    }
    TS ecof = ts_sub(ts_add(ts_mul(p.S, p.G, r2), ts_mul(p.T, p.H, r2)),
                     TS{QVec{Rat(1)}});
    if (!ts_is_zero(ecof)) {
        auto [q2, rem2] = ts_divmod_monic(ts_mul(p.S, ecof, r2), p.H, r2);
        p.S = ts_sub(p.S, rem2);
        p.T = ts_sub(p.T, ts_add(ts_mul(p.T, ecof, r2), ts_mul(q2, p.G, r2)));
    }
}

// Lift the monic factorization F = prod(monic_factors) from t=0 to mod t^K
// along a binary tree of pair lifts.
void lift_tree(const TS& F, const std::vector<QVec>& monic_factors, int lo, int hi,
               int K, std::vector<TS>& out) {
    if (hi - lo == 1) {
        out[lo] = F;
        return;
    }
    int mid = lo + (hi - lo) / 2;
    QVec g0{Rat(1)}, h0{Rat(1)};
    for (int i = lo; i < mid; ++i) g0 = uv_mul(g0, monic_factors[i]);
    for (int i = mid; i < hi; ++i) h0 = uv_mul(h0, monic_factors[i]);
    auto bez = uv_ext_gcd(g0, h0);
    if (uv_degree(bez.g) != 0)
        throw std::logic_error("lift_tree: specialized factors are not coprime");

    HenselPair p{qvec_to_ts(g0), qvec_to_ts(h0), qvec_to_ts(bez.s), qvec_to_ts(bez.t)};
    int r = 1;
    while (r < K) {
        int r2 = std::min(2 * r, K);
        hensel_step(F, p, r2);
        r = r2;
    }
    lift_tree(p.G, monic_factors, lo, mid, K, out);
    lift_tree(p.H, monic_factors, mid, hi, K, out);
}

Polynomial ts_to_polynomial(const TS& f) {
    Polynomial r(2);
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t l = 0; l < f[j].size(); ++l)
            if (f[j][l] != 0)
                r.add_term(Monomial{static_cast<int>(j), static_cast<int>(l)}, f[j][l]);
    return r;
}

// coefficient vectors of f seen as a polynomial in x1 with Z[x2] entries
std::vector<ZVec> x2_coefficients(const Polynomial& f) {
    std::vector<ZVec> coeffs(f.degree_in(0) + 1);
    for (const auto& [m, c] : f.terms()) {
        auto& vec = coeffs[m[0]];
        if (static_cast<int>(vec.size()) <= m[1]) vec.resize(m[1] + 1, Int(0));
        if (c.get_den() != 1) throw std::logic_error("x2_coefficients: integer input required");
        vec[m[1]] = c.get_num();
    }
    for (auto& vec : coeffs)
        while (!vec.empty() && vec.back() == 0) vec.pop_back();
    return coeffs;
}

}  // namespace

// gcd of the x2-coefficient polynomials: the content of f w.r.t. x1
ZVec content_in_x2(const Polynomial& f) {
    ZVec cont;
    for (const auto& vec : x2_coefficients(f)) cont = zv_gcd(cont, vec);
    return cont;
}

// Primitive-PRS gcd in Q[x2][x1]; inputs nonzero with integer coefficients,
// result primitive with positive leading coefficient.
Polynomial bivariate_gcd(Polynomial a, Polynomial b) {
    if (a.nvars() != 2 || b.nvars() != 2) throw std::invalid_argument("bivariate_gcd: nvars must be 2");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("bivariate_gcd: zero input");

    auto pp_x1 = [](const Polynomial& f) {
        ZVec cont = content_in_x2(f);
        Polynomial c2 = Polynomial(2);
        for (std::size_t i = 0; i < cont.size(); ++i)
            if (cont[i] != 0) c2.add_term(Monomial{0, static_cast<int>(i)}, Rat(cont[i]));
        auto q = f.divide_exact(c2);
        if (!q) throw std::logic_error("content does not divide");
        return *q;
    };
    auto lc_x1 = [](const Polynomial& f) {
        int d = f.degree_in(0);
        Polynomial lc(2);
        for (const auto& [m, c] : f.terms())
            if (m[0] == d) lc.add_term(Monomial{0, m[1]}, c);
        return lc;
    };

    a = a.primitive_part();
    b = b.primitive_part();
    ZVec ca = content_in_x2(a), cb = content_in_x2(b);
    ZVec cg = zv_gcd(ca, cb);
    Polynomial content_gcd(2);
    for (std::size_t i = 0; i < cg.size(); ++i)
        if (cg[i] != 0) content_gcd.add_term(Monomial{0, static_cast<int>(i)}, Rat(cg[i]));

    a = pp_x1(a);
    b = pp_x1(b);
    if (a.degree_in(0) < b.degree_in(0)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(0) > 0) {
        // pseudo-remainder of a by b in x1
        Polynomial lb = lc_x1(b);
        Polynomial r = a;
        int db = b.degree_in(0);
        while (!r.is_zero() && r.degree_in(0) >= db) {
            Polynomial lr = lc_x1(r);
            Monomial shift{r.degree_in(0) - db, 0};
            r = r * lb - b * (lr * Polynomial::from_term(2, shift, Rat(1)));
        }
        a = std::move(b);
        if (r.is_zero()) {
            b = r;
        } else {
            auto [ri, scale] = r.scaled_to_integer();
            b = pp_x1(ri.primitive_part());
        }
    }
    Polynomial g = b.is_zero() ? a : Polynomial::constant(2, 1);
    g = (g * content_gcd);
    return g.primitive_part();
}

// Hensel-based factorization of s: primitive, squarefree, deg_x1 >= 1 and no
// factor free of x1. Returns primitive irreducible bivariate factors.
std::vector<Polynomial> factor_bivariate_squarefree(const Polynomial& s) {
    int m = s.degree_in(0);
    int n_y = s.degree_in(1);

    // leading x1-coefficient as a polynomial in x2
    ZVec L;
    for (const auto& [mon, c] : s.terms()) {
        if (mon[0] != m) continue;
        if (static_cast<int>(L.size()) <= mon[1]) L.resize(mon[1] + 1, Int(0));
        L[mon[1]] = c.get_num();
    }
    while (!L.empty() && L.back() == 0) L.pop_back();

    // pick y0 with lc(y0) != 0 and s(x, y0) squarefree
    long y0 = 0;
    QVec u;
    for (long k = 0;; k = k >= 0 ? -(k + 1) : -k) {
        if (zv_eval(L, Int(k)) != 0) {
            Polynomial uq = s.specialize_var(1, Rat(static_cast<long>(k)));
            u = poly_to_qvec(uq);
            if (uv_degree(uv_gcd(u, uv_derivative(u))) == 0) {
                y0 = k;
                break;
            }
        }
        if (k > 4 * (m + 1) * (n_y + 1) + 4)
            throw std::logic_error("no good specialization point found");
    }

    Factorization uf = factor_univariate(qvec_to_poly(u));
    if (uf.factors.size() == 1) return {s};

    // shift to t = x2 - y0 and lift
    Polynomial shat = s.substitute({Polynomial::variable(2, 1),
                                    Polynomial::variable(2, 2) +
                                        Polynomial::constant(2, Rat(y0))});
    int K = 2 * n_y + 1;
    QVec Lhat;
    {
        std::vector<ZVec> coeffs = x2_coefficients(shat);
        Lhat = to_qvec(coeffs[m]);
    }
    QVec Linv = series_inverse(Lhat, K);

    TS shat_ts(m + 1);
    for (const auto& [mon, c] : shat.terms()) {
        auto& vec = shat_ts[mon[0]];
        if (static_cast<int>(vec.size()) <= mon[1]) vec.resize(mon[1] + 1, Rat(0));
        vec[mon[1]] = c;
    }
    for (auto& vec : shat_ts) uv_trim(vec);
    TS M = ts_scale_series(shat_ts, Linv, K);
    if (ts_deg_x(M) != m || M.back() != QVec{Rat(1)})
        throw std::logic_error("monic normalization failed");

    std::vector<QVec> monic_factors;
    for (const auto& [fac, mult] : uf.factors) {
        QVec v = poly_to_qvec(fac);
        Rat lead = v.back();
        for (auto& c : v) c /= lead;
        monic_factors.push_back(std::move(v));
    }
    std::vector<TS> lifted(monic_factors.size());
    lift_tree(M, monic_factors, 0, static_cast<int>(monic_factors.size()), K, lifted);

    // recombine subsets, smallest first
    std::vector<Polynomial> out;
    Polynomial rest = s;
    std::vector<int> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    Polynomial unshift_x = Polynomial::variable(2, 1);
    Polynomial unshift_t = Polynomial::variable(2, 2) - Polynomial::constant(2, Rat(y0));

    std::size_t msz = 1;
    while (2 * msz <= alive.size()) {
        bool found = false;
        std::vector<int> pick(msz);
        for (std::size_t i = 0; i < msz; ++i) pick[i] = static_cast<int>(i);
        while (true) {
            TS prod = qvec_to_ts(Lhat);
            for (std::size_t i = 0; i < msz; ++i)
                prod = ts_mul(prod, lifted[alive[pick[i]]], K);
            Polynomial cand_xt = ts_to_polynomial(prod);
            Polynomial cand = cand_xt.substitute({unshift_x, unshift_t});
            if (!cand.is_zero()) {
                cand = cand.scaled_to_integer().first.primitive_part();
                if (!cand.is_constant()) {
                    auto q = rest.divide_exact(cand);
                    if (q) {
                        out.push_back(cand);
                        rest = q->scaled_to_integer().first.primitive_part();
                        std::vector<int> next_alive;
                        for (std::size_t i = 0, j = 0; i < alive.size(); ++i) {
                            if (j < pick.size() && static_cast<int>(i) == pick[j])
                                ++j;
                            else
                                next_alive.push_back(alive[i]);
                        }
                        alive = std::move(next_alive);
                        found = true;
                        break;
                    }
                }
            }
            int pos = static_cast<int>(msz) - 1;
            while (pos >= 0 && pick[pos] == static_cast<int>(alive.size() - msz + pos)) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (std::size_t i = pos + 1; i < msz; ++i) pick[i] = pick[i - 1] + 1;
        }
        if (!found) ++msz;
    }
    if (!rest.is_constant()) out.push_back(rest);
    return out;
}

}  // namespace detail

}  // namespace dgc
