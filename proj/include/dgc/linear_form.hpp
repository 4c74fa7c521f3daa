#pragma once

#include <vector>

#include "dgc/polynomial.hpp"

namespace dgc {

/// Canonicalize an integer vector in place: divide by the gcd and flip the
/// sign so the first nonzero entry is positive. Throws on the zero vector.
void make_primitive(std::vector<Int>& v);

/// Integer linear form sum c_i * x_i, stored primitive with the first
/// nonzero coefficient positive.
class LinearForm {
public:
    explicit LinearForm(std::vector<Int> coeffs);

    /// Build from rational coefficients by clearing denominators first.
    static LinearForm from_rational(const std::vector<Rat>& coeffs);

    int nvars() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Height: max |c_i|.
    Int height() const;

    Polynomial to_polynomial() const;
    Rat evaluate(const std::vector<Rat>& point) const;

    bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }
    bool operator<(const LinearForm& o) const;  // height, then coefficient order

    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

bool linearly_independent(const LinearForm& a, const LinearForm& b);

}  // namespace dgc
