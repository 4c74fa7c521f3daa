#include "dgc/count.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dgc/linear_form.hpp"
#include "dgc/parse.hpp"
#include "dgc/upoly.hpp"

namespace dgc {

namespace {

// f with integer coefficients, terms regrouped by the exponent of the last
// variable: residual[j] lists (coef, prefix exponents) for x_n-degree j.
struct FiberForm {
    int n;
    int last_degree;
    struct Term {
        Int coef;
        Monomial prefix;  // exponents of x_1..x_{n-1}
    };
    std::vector<std::vector<Term>> by_last;

    explicit FiberForm(const Polynomial& f_int) : n(f_int.nvars()) {
        last_degree = f_int.degree_in(n - 1);
        by_last.resize(last_degree + 1);
        for (const auto& [m, c] : f_int.terms()) {
            Term t;
            t.coef = c.get_num();
            t.prefix.assign(m.begin(), m.end() - 1);
            by_last[m[n - 1]].push_back(std::move(t));
        }
    }

    // residual coefficients at a fixed prefix; powers[v][e] = prefix_v^e
    void residual(const std::vector<std::vector<Int>>& powers, ZVec& out) const {
        out.assign(last_degree + 1, Int(0));
        Int term;
        for (int j = 0; j <= last_degree; ++j) {
            for (const auto& t : by_last[j]) {
                term = t.coef;
                for (int v = 0; v < n - 1; ++v)
                    if (t.prefix[v] > 0) term *= powers[v][t.prefix[v]];
                out[j] += term;
            }
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
    }
};

// visit integer points: prefix coordinates in lexicographic order from lo to
// hi in the first coordinate, full range elsewhere; roots ascending
template <class Fn>
void visit_range(const FiberForm& form, long B, long x1_lo, long x1_hi, Fn&& emit) {
    int n = form.n;
    if (n == 1) {
        // no prefix: the polynomial itself is the residual
        ZVec res;
        std::vector<std::vector<Int>> no_powers;
        form.residual(no_powers, res);
        if (res.empty()) {
            for (long v = -B; v <= B; ++v) emit(std::vector<Int>{Int(v)});
        } else {
            for (const Int& r : integer_roots_in_box(res, Int(B)))
                emit(std::vector<Int>{r});
        }
        return;
    }

    std::vector<long> prefix(n - 1, -B);
    prefix[0] = x1_lo;
    std::vector<std::vector<Int>> powers(n - 1);
    ZVec res;
    std::vector<Int> point(n);

    // max exponent per prefix variable
    std::vector<int> maxe(n - 1, 0);
    for (const auto& layer : form.by_last)
        for (const auto& t : layer)
            for (int v = 0; v < n - 1; ++v) maxe[v] = std::max(maxe[v], t.prefix[v]);
    for (int v = 0; v < n - 1; ++v) powers[v].resize(maxe[v] + 1, Int(1));

    auto refresh_powers = [&](int v) {
        Int x(prefix[v]);
        for (int e = 1; e <= maxe[v]; ++e) powers[v][e] = powers[v][e - 1] * x;
    };
    for (int v = 0; v < n - 1; ++v) refresh_powers(v);

    while (true) {
        form.residual(powers, res);
        for (int v = 0; v < n - 1; ++v) point[v] = prefix[v];
        if (res.empty()) {
            for (long last = -B; last <= B; ++last) {
                point[n - 1] = last;
                emit(point);
            }
        } else {
            for (const Int& r : integer_roots_in_box(res, Int(B))) {
                point[n - 1] = r;
                emit(point);
            }
        }
        // odometer step (last prefix coordinate fastest)
        int v = n - 2;
        while (v >= 0) {
            long limit = (v == 0) ? x1_hi : B;
            if (prefix[v] < limit) {
                ++prefix[v];
                refresh_powers(v);
                break;
            }
            prefix[v] = -B;
            refresh_powers(v);
            --v;
        }
        if (v < 0) break;
    }
}

Polynomial integer_form(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no point set");
    return f.scaled_to_integer().first;
}

}  // namespace

std::vector<std::vector<Int>> enumerate_points(const Polynomial& f, long B) {
    if (B < 1) throw std::invalid_argument("B must be positive");
    FiberForm form(integer_form(f));
    std::vector<std::vector<Int>> out;
    visit_range(form, B, -B, B, [&](const std::vector<Int>& p) { out.push_back(p); });
    return out;
}

Int count_points(const Polynomial& f, long B, int workers) {
    if (B < 1) throw std::invalid_argument("B must be positive");
    FiberForm form(integer_form(f));
    if (workers <= 1 || form.n == 1) {
        Int total = 0;
        visit_range(form, B, -B, B, [&](const std::vector<Int>&) { total += 1; });
        return total;
    }

    long span = 2 * B + 1;
    int k = std::min<long>(workers, span);
    std::vector<Int> partial(k, Int(0));
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (int w = 0; w < k; ++w) {
        long lo = -B + (span * w) / k;
        long hi = -B + (span * (w + 1)) / k - 1;
        pool.emplace_back([&, w, lo, hi]() {
            Int local = 0;
            visit_range(form, B, lo, hi, [&](const std::vector<Int>&) { local += 1; });
            partial[w] = local;
        });
    }
    for (auto& t : pool) t.join();
    Int total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

Int count_projective(const Polynomial& f, long B) {
    if (!f.is_homogeneous() || f.is_zero())
        throw std::invalid_argument("count_projective: nonzero homogeneous input required");
    Int total = 0;
    for (const auto& p : enumerate_points(f, B)) {
        Int g = 0;
        bool zero = true, sign_ok = false, first = true;
        for (const auto& c : p) {
            if (c != 0) {
                zero = false;
                if (first) {
                    sign_ok = c > 0;
                    first = false;
                }
            }
            g = gcd(g, c);
        }
        if (zero || !sign_ok || g != 1) continue;
        total += 1;
    }
    return total;
}

Int schwartz_zippel_bound(int d, int m, long B) {
    if (d < 1 || m < 0 || B < 1) throw std::invalid_argument("schwartz_zippel_bound: bad arguments");
    return Int(d) * pow_int(Int(2 * B + 1), static_cast<unsigned long>(m));
}

Line::Line(std::vector<Rat> base, std::vector<Int> direction)
    : base_(std::move(base)), dir_(std::move(direction)) {
    if (base_.size() != dir_.size() || base_.empty())
        throw std::invalid_argument("line needs matching base/direction dimensions");
    make_primitive(dir_);

    // canonical base: minimize max_i |base_i + t dir_i| over t, then pick the
    // lexicographically smallest point of the minimizing interval
    int n = static_cast<int>(dir_.size());
    auto value = [&](const Rat& t) {
        Rat best = 0;
        for (int i = 0; i < n; ++i) {
            Rat coord = base_[i] + t * Rat(dir_[i]);
            Rat a = abs(coord);
            if (a > best) best = a;
        }
        return best;
    };
    std::vector<Rat> candidates;
    for (int i = 0; i < n; ++i) {
        if (dir_[i] == 0) continue;
        candidates.push_back(-base_[i] / Rat(dir_[i]));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            // |b_i + t v_i| = |b_j + t v_j| kinks (v_j may be zero)
            Rat denom_minus = Rat(dir_[i] - dir_[j]);
            if (denom_minus != 0) candidates.push_back((base_[j] - base_[i]) / denom_minus);
            Rat denom_plus = Rat(dir_[i] + dir_[j]);
            if (denom_plus != 0) candidates.push_back((-base_[j] - base_[i]) / denom_plus);
        }
    }
    Rat best = value(candidates.front());
    for (const auto& t : candidates) {
        Rat v = value(t);
        if (v < best) best = v;
    }
    Rat t_lo = candidates.front(), t_hi = candidates.front();
    bool have = false;
    for (const auto& t : candidates) {
        if (value(t) != best) continue;
        if (!have) {
            t_lo = t_hi = t;
            have = true;
        } else {
            if (t < t_lo) t_lo = t;
            if (t > t_hi) t_hi = t;
        }
    }
    Rat t_star = t_lo;
    for (int i = 0; i < n; ++i) {
        if (dir_[i] == 0) continue;
        t_star = dir_[i] > 0 ? t_lo : t_hi;
        break;
    }
    for (int i = 0; i < n; ++i) base_[i] += t_star * Rat(dir_[i]);
}

Int Line::direction_height() const {
    Int h = 0;
    for (const auto& c : dir_) {
        Int a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

bool Line::operator<(const Line& o) const {
    if (dir_ != o.dir_) return dir_ < o.dir_;
    return base_ < o.base_;
}

std::string Line::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < base_.size(); ++i) os << (i ? "," : "") << base_[i];
    os << ") + t*(";
    for (std::size_t i = 0; i < dir_.size(); ++i) os << (i ? "," : "") << dir_[i];
    os << ")";
    return os.str();
}

Int count_on_line(const Line& L, long B) {
    if (B < 0) throw std::invalid_argument("negative box");
    int n = L.nvars();
    const auto& a = L.base();
    const auto& v = L.direction();

    // w with w . v = 1 pins the integer parameters to one residue class
    std::vector<Int> w(n, Int(0));
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        if (g == 0) {
            g = abs(v[i]);
            w[i] = v[i] > 0 ? 1 : -1;
        } else {
            Int gg, sc, tc;
            mpz_gcdext(gg.get_mpz_t(), sc.get_mpz_t(), tc.get_mpz_t(), g.get_mpz_t(),
                       v[i].get_mpz_t());
            for (int j = 0; j < i; ++j) w[j] *= sc;
            w[i] = tc;
            g = gg;
        }
    }
    Rat t_rep = 0;
    for (int i = 0; i < n; ++i) t_rep -= Rat(w[i]) * a[i];

    std::vector<Rat> x0(n);
    for (int i = 0; i < n; ++i) {
        x0[i] = a[i] + t_rep * Rat(v[i]);
        if (x0[i].get_den() != 1) return 0;  // the line has no integral points
    }

    // k ranges with |x0_i + k v_i| <= B
    bool any = false;
    Rat lo, hi;
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) {
            if (abs(x0[i]) > B) return 0;
            continue;
        }
        Rat l = (Rat(-B) - x0[i]) / Rat(v[i]);
        Rat h = (Rat(B) - x0[i]) / Rat(v[i]);
        if (l > h) std::swap(l, h);
        if (!any) {
            lo = l;
            hi = h;
            any = true;
        } else {
            if (l > lo) lo = l;
            if (h < hi) hi = h;
        }
    }
    if (!any) throw std::logic_error("zero direction");
    if (lo > hi) return 0;
    Int lo_i, hi_i;
    mpz_cdiv_q(lo_i.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(hi_i.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    Int cnt = hi_i - lo_i + 1;
    return cnt > 0 ? cnt : Int(0);
}

double curve_bound(int d, long B, CurveBoundKind kind, double C, double kappa) {
    if (d < 1 || B < 2) throw std::invalid_argument("curve_bound: d >= 1, B >= 2 required");
    double logB = std::log(static_cast<double>(B));
    if (kind == CurveBoundKind::Affine)
        return C * std::pow(d, 3) * std::pow(static_cast<double>(B), 1.0 / d) * (logB + d);
    return C * std::pow(d, 2) * std::pow(static_cast<double>(B), 2.0 / d) * std::pow(logB, kappa);
}

std::string RulingFamily::to_string() const {
    std::ostringstream os;
    os << "direction (";
    for (std::size_t i = 0; i < direction.size(); ++i) os << (i ? "," : "") << direction[i];
    os << "), transversal x" << (transversal_coordinate + 1) << ", base curve "
       << dgc::to_string(base_curve);
    return os.str();
}

}  // namespace dgc
