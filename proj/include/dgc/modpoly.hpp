#pragma once

#include <cstdint>
#include <vector>

#include "dgc/numeric.hpp"
#include "dgc/upoly.hpp"

namespace dgc {

// Arithmetic mod a word-sized odd prime (p < 2^62), products via __int128.
struct Zp64 {
    using Elem = std::uint64_t;
    std::uint64_t p;

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem pow(Elem a, Int e) const {
        Elem r = 1;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const { return pow(a, Int(p) - 2); }
    Elem from_int(const Int& v) const {
        std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), p);
        return r;
    }
    Int to_int(Elem a) const { return Int(static_cast<unsigned long>(a)); }
    bool is_zero(Elem a) const { return a == 0; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
};

// Arithmetic mod an arbitrary odd prime held as an mpz.
struct ZpBig {
    using Elem = Int;
    Int p;

    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem s = a - b;
        if (s < 0) s += p;
        return s;
    }
    Elem neg(const Elem& a) const { return a == 0 ? Int(0) : p - a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
    Elem pow(Elem a, Int e) const {
        Elem r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r;
        if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
            throw std::logic_error("non-invertible element mod p");
        return r;
    }
    Elem from_int(const Int& v) const {
        Elem r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    Int to_int(const Elem& a) const { return a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
};

/// Dense univariate polynomial arithmetic over a prime field, parametrized
/// by the coefficient ring above. Provides what Cantor–Zassenhaus needs.
template <class R>
struct ModPoly {
    using Vec = std::vector<typename R::Elem>;
    R ring;

    explicit ModPoly(R r) : ring(r) {}

    void trim(Vec& f) const {
        while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
    }
    int degree(const Vec& f) const { return static_cast<int>(f.size()) - 1; }

    Vec from_zvec(const ZVec& f) const {
        Vec r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) r[i] = ring.from_int(f[i]);
        trim(r);
        return r;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        if (a.empty() || b.empty()) return {};
        Vec r(a.size() + b.size() - 1, ring.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (ring.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }

    Vec rem(Vec a, const Vec& b) const {
        trim(a);
        int db = degree(b);
        if (db < 0) throw std::invalid_argument("mod division by zero");
        auto lead_inv = ring.inv(b.back());
        while (degree(a) >= db) {
            auto c = ring.mul(a.back(), lead_inv);
            int k = degree(a) - db;
            for (int i = 0; i <= db; ++i)
                a[k + i] = ring.sub(a[k + i], ring.mul(c, b[i]));
            trim(a);
        }
        return a;
    }

    Vec mulmod(const Vec& a, const Vec& b, const Vec& m) const { return rem(mul(a, b), m); }

    Vec make_monic(Vec f) const {
        trim(f);
        if (f.empty()) return f;
        auto inv = ring.inv(f.back());
        for (auto& c : f) c = ring.mul(c, inv);
        return f;
    }

    Vec gcd(Vec a, Vec b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Vec r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return make_monic(a);
    }

    Vec powmod(Vec base, Int e, const Vec& m) const {
        Vec r{ring.one()};
        base = rem(std::move(base), m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
            base = mulmod(base, base, m);
            e >>= 1;
        }
        return r;
    }

    Vec derivative(const Vec& f) const {
        if (f.size() <= 1) return {};
        Vec r(f.size() - 1);
        for (std::size_t i = 1; i < f.size(); ++i)
            r[i - 1] = ring.mul(f[i], ring.from_int(Int(static_cast<unsigned long>(i))));
        trim(r);
        return r;
    }

    bool is_squarefree(const Vec& f) const {
        Vec d = derivative(f);
        if (d.empty()) return false;
        return degree(gcd(f, d)) == 0;
    }

    /// Complete factorization of a squarefree monic polynomial into monic
    /// irreducibles (distinct-degree then equal-degree splitting). The rng
    /// drives the splitting only; the returned set is unique regardless.
    std::vector<Vec> factor_squarefree_monic(Vec f, SplitMix64& rng) const {
        std::vector<Vec> out;
        f = make_monic(std::move(f));
        Int p = modulus();
        Vec x{ring.zero(), ring.one()};
        Vec h = x;
        int k = 0;
        while (degree(f) > 0) {
            ++k;
            if (2 * k > degree(f)) {
                out.push_back(make_monic(f));
                break;
            }
            h = powmod(std::move(h), p, f);
            Vec hx = h;
            // h - x
            if (hx.size() < 2) hx.resize(2, ring.zero());
            hx[1] = ring.sub(hx[1], ring.one());
            trim(hx);
            Vec g = gcd(f, hx);
            if (degree(g) > 0) {
                equal_degree_split(g, k, rng, out);
                // f /= g
                f = quotient_exact(f, g);
                h = rem(std::move(h), f);
            }
        }
        return out;
    }

    /// All roots of f mod p (f nonzero), via gcd with x^p - x and repeated
    /// degree-one splitting.
    std::vector<typename R::Elem> roots(const Vec& f_in, SplitMix64& rng) const {
        Vec f = make_monic(f_in);
        std::vector<typename R::Elem> out;
        if (degree(f) <= 0) return out;
        Int p = modulus();
        Vec x{ring.zero(), ring.one()};
        Vec xp = powmod(x, p, f);
        // xp - x
        if (xp.size() < 2) xp.resize(2, ring.zero());
        xp[1] = ring.sub(xp[1], ring.one());
        trim(xp);
        Vec g = gcd(f, xp);
        collect_roots(g, rng, out);
        return out;
    }

    Int modulus() const { return ring.to_int(ring.neg(ring.one())) + 1; }

    Vec quotient_exact(const Vec& a, const Vec& b) const {
        // long division, asserting zero remainder
        Vec q, r = a;
        trim(r);
        int db = degree(b);
        auto lead_inv = ring.inv(b.back());
        if (degree(r) >= db) q.assign(r.size() - b.size() + 1, ring.zero());
        while (degree(r) >= db) {
            auto c = ring.mul(r.back(), lead_inv);
            int k = degree(r) - db;
            q[k] = c;
            for (int i = 0; i <= db; ++i) r[k + i] = ring.sub(r[k + i], ring.mul(c, b[i]));
            trim(r);
        }
        if (!r.empty()) throw std::logic_error("quotient_exact: nonzero remainder");
        return q;
    }

private:
    void equal_degree_split(const Vec& g, int k, SplitMix64& rng, std::vector<Vec>& out) const {
        if (degree(g) == k) {
            out.push_back(make_monic(g));
            return;
        }
        Int p = modulus();
        Int exponent = (pow_int_big(p, k) - 1) / 2;
        while (true) {
            Vec a(degree(g), ring.zero());
            for (auto& c : a) c = ring.from_int(Int(rng.next()));
            trim(a);
            if (degree(a) < 1) continue;
            Vec b = powmod(a, exponent, g);
            if (b.empty()) continue;
            b[0] = ring.sub(b[0], ring.one());
            trim(b);
            Vec h = gcd(g, b);
            if (degree(h) > 0 && degree(h) < degree(g)) {
                equal_degree_split(h, k, rng, out);
                equal_degree_split(quotient_exact(g, h), k, rng, out);
                return;
            }
        }
    }

    void collect_roots(const Vec& g, SplitMix64& rng,
                       std::vector<typename R::Elem>& out) const {
        if (degree(g) <= 0) return;
        if (degree(g) == 1) {
            // monic x + c -> root -c
            out.push_back(ring.neg(g[0]));
            return;
        }
        Int p = modulus();
        Int exponent = (p - 1) / 2;
        while (true) {
            auto delta = ring.from_int(Int(rng.next()));
            // (x + delta)^((p-1)/2) - 1 mod g
            Vec shifted{delta, ring.one()};
            Vec b = powmod(shifted, exponent, g);
            if (b.empty()) continue;
            b[0] = ring.sub(b[0], ring.one());
            trim(b);
            Vec h = gcd(g, b);
            if (degree(h) > 0 && degree(h) < degree(g)) {
                collect_roots(h, rng, out);
                collect_roots(quotient_exact(g, h), rng, out);
                return;
            }
        }
    }

    static Int pow_int_big(const Int& base, int e) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }
};

/// Integer roots of f in [-B, B] for deg f >= 1: find the roots modulo a
/// fixed prime p > 2B+1, lift to the symmetric range and confirm exactly.
std::vector<Int> modular_integer_roots(const ZVec& f, const Int& B);

}  // namespace dgc
