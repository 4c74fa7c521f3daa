#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgc/monomial.hpp"
#include "dgc/numeric.hpp"

namespace dgc {

/// Sparse multivariate polynomial over Q with exact rational coefficients.
///
/// Terms are kept in a grlex-ordered map with no zero coefficients; every
/// exponent vector has length nvars(). Values are immutable from the outside
/// (all operations build new polynomials), so they can be shared freely
/// across threads.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    explicit Polynomial(int nvars = 1);

    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int index1);  // x<index1>, 1-based
    static Polynomial from_term(int nvars, const Monomial& m, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Max total degree over terms; throws on the zero polynomial.
    int degree() const;
    /// Max exponent of variable `var` (0-based); 0 for the zero polynomial.
    int degree_in(int var) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of m (zero if absent).
    Rat coeff(const Monomial& m) const;
    /// Leading (grlex-largest) term; throws on zero.
    std::pair<Monomial, Rat> leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial pow(unsigned e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial partial_derivative(int var) const;

    /// Sum of the terms of total degree exactly i.
    Polynomial homogeneous_part(int i) const;
    bool is_homogeneous() const;

    /// Composition: substitute images[v] for variable v. All images must
    /// share one variable count; the result lives in that many variables.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Specialize one variable to a rational constant; the variable is
    /// removed and the result has nvars()-1 variables.
    Polynomial specialize_var(int var, const Rat& value) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    Rat evaluate_int(const std::vector<Int>& point) const;

    /// Projective height of the coefficient tuple: clear denominators,
    /// divide by the gcd, take the max absolute value. Throws on zero.
    Int height() const;

    bool has_integer_coefficients() const;
    /// gcd of the (integer) coefficients; input must have integer
    /// coefficients and be nonzero.
    Int content() const;
    /// Divide by the content, then flip signs so the grlex-leading
    /// coefficient is positive. Integer coefficients required.
    Polynomial primitive_part() const;

    /// Smallest positive lambda with lambda*f integral: (lambda*f, lambda).
    std::pair<Polynomial, Int> scaled_to_integer() const;

    /// Exact multivariate division by a single divisor: f = q*d + r with no
    /// term of r divisible by the leading monomial of d. Returns q iff r=0.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    // mutation used by builders; drops zero coefficients
    void add_term(const Monomial& m, const Rat& c);

private:
    int nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

/// All monomials in `nvars` variables of total degree exactly d / at most d,
/// in grlex order. The "at most" variant is the column layout used by the
/// evaluation and Ruppert matrices.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

/// Kronecker transform of F in Q[T, Y1..Yn] (T is variable 1):
/// Kr(F) = F(T, Y, Y^a, ..., Y^{a^(n-1)}) with a = 1 + max_i deg_{Y_i} F.
/// The monomial map is injective, so coefficients carry over unchanged.
Polynomial kronecker_transform(const Polynomial& F);
/// The base a used by kronecker_transform.
int kronecker_base(const Polynomial& F);
/// Inverse of the monomial map: lift a bivariate (T, Y) polynomial back to
/// T plus n Y-variables by base-a digit expansion of the Y-exponent.
Polynomial kronecker_inverse(const Polynomial& G, int base, int n_yvars);

}  // namespace dgc
