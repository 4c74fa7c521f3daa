#include "dgc/linear_form.hpp"

#include <sstream>
#include <stdexcept>

#include "dgc/parse.hpp"

namespace dgc {

void make_primitive(std::vector<Int>& v) {
    Int g = gcd_vec(v);
    if (g == 0) throw std::invalid_argument("zero vector cannot be made primitive");
    for (auto& x : v)
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    for (auto& x : v) x /= g;
}

LinearForm::LinearForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("linear form needs coefficients");
    make_primitive(coeffs_);
}

LinearForm LinearForm::from_rational(const std::vector<Rat>& coeffs) {
    Int den = 1;
    for (const auto& c : coeffs) den = lcm(den, c.get_den());
    std::vector<Int> scaled;
    scaled.reserve(coeffs.size());
    for (const auto& c : coeffs) scaled.push_back(c.get_num() * (den / c.get_den()));
    return LinearForm(std::move(scaled));
}

Int LinearForm::height() const {
    Int h = 0;
    for (const auto& c : coeffs_) {
        Int a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(nvars());
    for (int i = 0; i < nvars(); ++i) {
        if (coeffs_[i] == 0) continue;
        Monomial m(nvars(), 0);
        m[i] = 1;
        p.add_term(m, Rat(coeffs_[i]));
    }
    return p;
}

Rat LinearForm::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw std::invalid_argument("evaluate: wrong point dimension");
    Rat acc = 0;
    for (int i = 0; i < nvars(); ++i) acc += Rat(coeffs_[i]) * point[i];
    return acc;
}

bool LinearForm::operator<(const LinearForm& o) const {
    Int ha = height(), hb = o.height();
    if (ha != hb) return ha < hb;
    return coeffs_ < o.coeffs_;
}

std::string LinearForm::to_string() const { return dgc::to_string(to_polynomial()); }

bool linearly_independent(const LinearForm& a, const LinearForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("nvars mismatch");
    // primitive vectors are dependent iff equal up to sign; sign is canonical
    return a.coeffs() != b.coeffs();
}

}  // namespace dgc
