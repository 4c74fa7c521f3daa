#include "dgc/modpoly.hpp"

#include <stdexcept>

namespace dgc {

namespace {

// primes just above 2^31; several in case a residual vanishes mod one of them
Int nth_root_prime(int k) {
    static std::vector<Int> primes;
    while (static_cast<int>(primes.size()) <= k) {
        Int start = primes.empty() ? Int(1) << 31 : primes.back();
        Int p;
        mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
        primes.push_back(p);
    }
    return primes[k];
}

}  // namespace

std::vector<Int> modular_integer_roots(const ZVec& f, const Int& B) {
    if (f.empty() || f.back() == 0) throw std::invalid_argument("modular_integer_roots: untrimmed input");
    if (2 * B + 1 >= (Int(1) << 31))
        throw std::invalid_argument("box too large for the fixed root-finding primes");

    for (int attempt = 0; attempt < 16; ++attempt) {
        Int p = nth_root_prime(attempt);
        Zp64 ring{p.get_ui()};
        ModPoly<Zp64> mp(ring);
        auto fp = mp.from_zvec(f);
        if (fp.empty()) continue;                      // every coefficient vanished mod p
        if (mp.degree(fp) == 0) return {};             // nonzero constant mod p: no roots anywhere
        SplitMix64 rng(0x726f6f7470ULL);
        auto residues = mp.roots(fp, rng);
        std::vector<Int> out;
        Int half = (p - 1) / 2;
        for (auto r : residues) {
            Int cand = ring.to_int(r);
            if (cand > half) cand -= p;
            if (abs(cand) > B) continue;
            if (zv_eval(f, cand) == 0) out.push_back(cand);
        }
        return out;
    }
    throw std::logic_error("all root-finding primes divide the polynomial");
}

}  // namespace dgc
