#include "dgc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgc {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index1) {
    if (index1 < 1 || index1 > nvars)
        throw std::invalid_argument("variable index out of range");
    Monomial m(nvars, 0);
    m[index1 - 1] = 1;
    return from_term(nvars, m, 1);
}

Polynomial Polynomial::from_term(int nvars, const Monomial& m, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("monomial length does not match nvars");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int Polynomial::degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
    return total_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::pair<Monomial, Rat> Polynomial::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r(nvars_);
    Monomial m(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::partial_derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Polynomial Polynomial::homogeneous_part(int i) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == i) r.terms_.emplace(m, c);
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: need one image per variable");
    int out_vars = images.empty() ? 1 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != out_vars)
            throw std::invalid_argument("substitute: images disagree on nvars");

    // cache powers of each image as they are needed
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v) powers[v].push_back(Polynomial::constant(out_vars, 1));
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& tab = powers[v];
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[v]);
        return tab[e];
    };

    Polynomial r(out_vars);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(out_vars, c);
        for (int v = 0; v < nvars_; ++v)
            if (m[v] > 0) t = t * power(v, m[v]);
        r += t;
    }
    return r;
}

Polynomial Polynomial::specialize_var(int var, const Rat& value) const {
    if (nvars_ < 2) throw std::invalid_argument("specialize_var needs nvars >= 2");
    Polynomial r(nvars_ - 1);
    std::vector<Rat> pow_cache{Rat(1)};
    auto vpow = [&](int e) {
        while (static_cast<int>(pow_cache.size()) <= e)
            pow_cache.push_back(pow_cache.back() * value);
        return pow_cache[e];
    };
    Monomial reduced(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        int k = 0;
        for (int i = 0; i < nvars_; ++i)
            if (i != var) reduced[k++] = m[i];
        r.add_term(reduced, c * vpow(m[var]));
    }
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: wrong point dimension");
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < m[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

Rat Polynomial::evaluate_int(const std::vector<Int>& point) const {
    std::vector<Rat> p(point.begin(), point.end());
    return evaluate(p);
}

Int Polynomial::height() const {
    if (terms_.empty()) throw std::invalid_argument("height of the zero polynomial");
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_) den_lcm = lcm(den_lcm, c.get_den());
    Int g = 0;
    std::vector<Int> scaled;
    scaled.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Int v = c.get_num() * (den_lcm / c.get_den());
        g = gcd(g, v);
        scaled.push_back(v);
    }
    Int h = 0;
    for (auto& v : scaled) {
        Int a = abs(v / g);
        if (a > h) h = a;
    }
    return h;
}

bool Polynomial::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Int Polynomial::content() const {
    if (terms_.empty()) throw std::invalid_argument("content of the zero polynomial");
    if (!has_integer_coefficients())
        throw std::invalid_argument("content requires integer coefficients");
    Int g = 0;
    for (const auto& [m, c] : terms_) g = gcd(g, c.get_num());
    return g;
}

Polynomial Polynomial::primitive_part() const {
    Int g = content();
    if (terms_.rbegin()->second < 0) g = -g;
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Rat(c.get_num() / g));
    return r;
}

std::pair<Polynomial, Int> Polynomial::scaled_to_integer() const {
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_) den_lcm = lcm(den_lcm, c.get_den());
    return {*this * Rat(den_lcm), den_lcm};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (nvars_ != divisor.nvars_) throw std::invalid_argument("nvars mismatch");
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial q(nvars_);
    Polynomial r = *this;
    auto [dm, dc] = divisor.leading_term();
    Monomial qm(nvars_);
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!monomial_divides(dm, rm)) return std::nullopt;
        for (int i = 0; i < nvars_; ++i) qm[i] = rm[i] - dm[i];
        Rat qc = rc / dc;
        q.add_term(qm, qc);
        r -= divisor * Polynomial::from_term(nvars_, qm, qc);
    }
    return q;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    // lexicographic backtracking over compositions of d
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            m[pos] = remaining;
            out.push_back(m);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto layer = monomials_of_degree(nvars, k);
        // within a degree, grlex ascending = plain lex ascending
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

int kronecker_base(const Polynomial& F) {
    if (F.is_zero()) throw std::invalid_argument("kronecker transform of zero");
    if (F.nvars() < 2) throw std::invalid_argument("kronecker transform needs T and at least one Y");
    int a = 0;
    for (int v = 1; v < F.nvars(); ++v) a = std::max(a, F.degree_in(v));
    return a + 1;
}

Polynomial kronecker_transform(const Polynomial& F) {
    int a = kronecker_base(F);
    int n = F.nvars() - 1;
    Polynomial out(2);
    for (const auto& [m, c] : F.terms()) {
        long ye = 0, apow = 1;
        for (int i = 0; i < n; ++i) {
            ye += m[1 + i] * apow;
            apow *= a;
        }
        Monomial mm{m[0], static_cast<int>(ye)};
        out.add_term(mm, c);
    }
    return out;
}

Polynomial kronecker_inverse(const Polynomial& G, int base, int n_yvars) {
    if (G.nvars() != 2) throw std::invalid_argument("kronecker_inverse expects a (T, Y) polynomial");
    Polynomial out(1 + n_yvars);
    Monomial m(1 + n_yvars, 0);
    for (const auto& [g, c] : G.terms()) {
        m[0] = g[0];
        int rest = g[1];
        for (int i = 0; i < n_yvars; ++i) {
            m[1 + i] = rest % base;
            rest /= base;
        }
        if (rest != 0) throw std::invalid_argument("Y-exponent out of range for the given base");
        out.add_term(m, c);
    }
    return out;
}

}  // namespace dgc
