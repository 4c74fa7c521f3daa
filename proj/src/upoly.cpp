#include "dgc/upoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dgc/modpoly.hpp"

namespace dgc {

void uv_trim(QVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int uv_degree(const QVec& f) { return static_cast<int>(f.size()) - 1; }

QVec uv_add(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uv_trim(r);
    return r;
}

QVec uv_sub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uv_trim(r);
    return r;
}

QVec uv_mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    uv_trim(r);
    return r;
}

QVec uv_scale(const QVec& a, const Rat& c) {
    if (c == 0) return {};
    QVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QVec, QVec> uv_divmod(const QVec& a, const QVec& b) {
    if (b.empty()) throw std::invalid_argument("univariate division by zero");
    QVec rem = a, quo;
    int db = uv_degree(b);
    if (uv_degree(a) >= db) quo.assign(a.size() - b.size() + 1, Rat(0));
    while (uv_degree(rem) >= db) {
        int k = uv_degree(rem) - db;
        Rat c = rem.back() / b.back();
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        uv_trim(rem);
    }
    return {quo, rem};
}

QVec uv_gcd(QVec a, QVec b) {
    uv_trim(a);
    uv_trim(b);
    while (!b.empty()) {
        QVec r = uv_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

UvExtGcd uv_ext_gcd(const QVec& a, const QVec& b) {
    QVec r0 = a, r1 = b;
    uv_trim(r0);
    uv_trim(r1);
    QVec s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = uv_divmod(r0, r1);
        QVec s2 = uv_sub(s0, uv_mul(q, s1));
        QVec t2 = uv_sub(t0, uv_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        Rat lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
        for (auto& c : t0) c /= lead;
    }
    return {r0, s0, t0};
}

QVec uv_derivative(const QVec& f) {
    if (f.size() <= 1) return {};
    QVec r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Rat(static_cast<long>(i));
    uv_trim(r);
    return r;
}

Rat uv_eval(const QVec& f, const Rat& x) {
    Rat acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ZVec uv_primitive(const QVec& f) {
    if (f.empty()) return {};
    Int den = 1;
    for (const auto& c : f) den = lcm(den, c.get_den());
    ZVec z(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) z[i] = f[i].get_num() * (den / f[i].get_den());
    return zv_primitive(z);
}

Int zv_content(const ZVec& f) {
    Int g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZVec zv_primitive(const ZVec& f) {
    ZVec r = f;
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return r;
    Int g = zv_content(r);
    if (r.back() < 0) g = -g;
    for (auto& c : r) c /= g;
    return r;
}

ZVec zv_gcd(ZVec a, ZVec b) {
    a = zv_primitive(a);
    b = zv_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    // primitive PRS: pseudo-remainders with content stripped each step
    while (!b.empty()) {
        int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
        Int scale = pow_int(b.back(), static_cast<unsigned long>(da - db + 1));
        QVec qa = to_qvec(a);
        for (auto& c : qa) c *= Rat(scale);
        QVec rem = uv_divmod(qa, to_qvec(b)).second;
        ZVec zr(rem.size());
        for (std::size_t i = 0; i < rem.size(); ++i) {
            if (rem[i].get_den() != 1) throw std::logic_error("pseudo-remainder not integral");
            zr[i] = rem[i].get_num();
        }
        a = std::move(b);
        b = zv_primitive(zr);
    }
    return a;
}

Int zv_eval(const ZVec& f, const Int& x) {
    Int acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QVec to_qvec(const ZVec& f) {
    QVec r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = Rat(f[i]);
    return r;
}

QVec poly_to_qvec(const Polynomial& f) {
    if (f.nvars() != 1) throw std::invalid_argument("poly_to_qvec: univariate input required");
    QVec r;
    for (const auto& [m, c] : f.terms()) {
        if (static_cast<std::size_t>(m[0]) >= r.size()) r.resize(m[0] + 1, Rat(0));
        r[m[0]] = c;
    }
    uv_trim(r);
    return r;
}

Polynomial qvec_to_poly(const QVec& f) {
    Polynomial p(1);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) p.add_term(Monomial{static_cast<int>(i)}, f[i]);
    return p;
}

Polynomial zvec_to_poly(const ZVec& f) { return qvec_to_poly(to_qvec(f)); }

Int zv_factor_coeff_bound(const ZVec& f) {
    if (f.empty()) throw std::invalid_argument("bound of zero polynomial");
    Int sumsq = 0;
    for (const auto& c : f) sumsq += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
    norm += 1;  // ceil
    Int bound = abs(f.back()) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size() - 1);
    return bound;
}

std::vector<Int> integer_roots_in_box(const ZVec& f_in, const Int& B) {
    ZVec f = f_in;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) throw std::invalid_argument("integer_roots_in_box: zero polynomial");
    std::vector<Int> roots;
    if (B < 0) return roots;

    // strip x^k; zero is a root if anything was stripped
    std::size_t shift = 0;
    while (shift < f.size() && f[shift] == 0) ++shift;
    if (shift > 0) {
        roots.push_back(0);
        f.erase(f.begin(), f.begin() + shift);
    }
    int d = static_cast<int>(f.size()) - 1;
    if (d >= 1) {
        if (d == 1) {
            Int num = -f[0];
            if (num % f[1] == 0) {
                Int r = num / f[1];
                if (abs(r) <= B && r != 0) roots.push_back(r);
            }
        } else if (d == 2) {
            Int disc = f[1] * f[1] - 4 * f[2] * f[0];
            Int sq;
            if (is_perfect_square(disc, &sq)) {
                for (int sign : {+1, -1}) {
                    Int num = -f[1] + sign * sq;
                    Int den = 2 * f[2];
                    if (num % den == 0) {
                        Int r = num / den;
                        if (abs(r) <= B && r != 0) roots.push_back(r);
                    }
                    if (sq == 0) break;
                }
            }
        } else {
            for (const Int& r : modular_integer_roots(f, B))
                if (r != 0) roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace dgc
