#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgc {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a search operation runs out of its configured budget.
// carries the bound that was exhausted so callers can retry with more.
class search_exhausted : public std::runtime_error {
public:
    search_exhausted(const std::string& what, long bound)
        : std::runtime_error(what), bound_reached(bound) {}
    long bound_reached;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// gcd of a vector, zero for the empty/all-zero vector
inline Int gcd_vec(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    bool ok = (r * r == n);
    if (ok && root) *root = r;
    return ok;
}

// exact k-th root when it exists
inline bool is_perfect_power(const Int& n, unsigned long k, Int* root = nullptr) {
    if (k == 0) throw std::invalid_argument("0th root");
    if (n < 0 && k % 2 == 0) return false;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (exact && root) *root = r;
    return exact != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// SplitMix64: the one fixed RNG all experiment sampling flows from.
// Chosen because the update is a single documented formula, so runs are
// reproducible across platforms and implementations:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection; exact, no modulo bias
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // uniform integer in [lo, hi] inclusive
    long range(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace dgc
