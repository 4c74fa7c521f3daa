#include "dgc/parse.hpp"

#include <cctype>
#include <sstream>

namespace dgc {

namespace {

class Parser {
public:
    Parser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    int nvars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        skip_ws();
        if (eat('-')) return -factor();
        Polynomial base = primary();
        if (eat('^')) {
            long e = natural("exponent");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            long k = natural("variable index");
            if (k < 1 || k > nvars_) fail("variable index out of range [1, " + std::to_string(nvars_) + "]");
            return Polynomial::variable(nvars_, static_cast<int>(k));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator digits");
                Int den = integer();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(nvars_, make_rat(num, den));
            }
            return Polynomial::constant(nvars_, Rat(num));
        }
        fail("expected a literal, variable, or '('");
    }

    long natural(const std::string& what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected " + what);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) fail(what + " too large");
            ++pos_;
        }
        return v;
    }

    Int integer() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Int(digits);
    }
};

void print_abs_term(std::ostream& os, const Monomial& m, const Rat& c) {
    Rat a = abs(c);
    bool printed = false;
    if (a != 1 || total_degree(m) == 0) {
        os << a;
        printed = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (printed) os << "*";
        os << "x" << (v + 1);
        if (m[v] > 1) os << "^" << m[v];
        printed = true;
    }
}

}  // namespace

Polynomial parse_poly(const std::string& text, int nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    return Parser(text, nvars).run();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        print_abs_term(os, m, c);
    }
    return os.str();
}

}  // namespace dgc
