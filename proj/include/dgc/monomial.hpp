#pragma once

#include <numeric>
#include <vector>

namespace dgc {

// Exponent vector; length is the ambient variable count.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic order: first by total degree, then lexicographically
// with x1 strongest. This is the one monomial order used everywhere
// (printing, leading terms, matrix column layouts).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace dgc
