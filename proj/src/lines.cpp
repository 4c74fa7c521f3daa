// Lines on an affine surface V(f) in A^3. For each primitive direction v
// with f_d(v) = 0 and bounded height, the bases a of lines a + t*v on the
// surface satisfy c_i(a) = 0 where f(a + t v) = sum_i c_i(a) t^i. Fixing
// the transversal coordinate a_{j*} = 0 (j* = first coordinate with
// v_{j*} != 0) leaves a system in two unknowns, solved exactly: factor the
// smallest nonzero c_i, then intersect each irreducible component with a
// non-multiple of it via resultants. Components dividing every c_i are
// one-parameter ruling families.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dgc/count.hpp"
#include "dgc/factor.hpp"
#include "dgc/parse.hpp"
#include "dgc/qmatrix.hpp"
#include "dgc/upoly.hpp"

namespace dgc {

namespace {

// resultant of two univariate rationals via the Sylvester determinant
Rat uv_resultant(const QVec& a, const QVec& b) {
    int m = uv_degree(a), n = uv_degree(b);
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        Rat r = 1;
        for (int i = 0; i < n; ++i) r *= a[0];
        return r;
    }
    if (n == 0) {
        Rat r = 1;
        for (int i = 0; i < m; ++i) r *= b[0];
        return r;
    }
    QMatrix S(m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S.at(r, r + i) = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S.at(n + r, r + i) = b[n - i];
    return S.determinant();
}

// bivariate p as a polynomial in w with QVec (in u) coefficients
std::vector<QVec> w_coefficients(const Polynomial& p) {
    std::vector<QVec> out(p.degree_in(1) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& vec = out[m[1]];
        if (static_cast<int>(vec.size()) <= m[0]) vec.resize(m[0] + 1, Rat(0));
        vec[m[0]] = c;
    }
    for (auto& v : out) uv_trim(v);
    return out;
}

QVec specialize_u(const std::vector<QVec>& wc, const Rat& u0) {
    QVec out(wc.size(), Rat(0));
    for (std::size_t j = 0; j < wc.size(); ++j) out[j] = uv_eval(wc[j], u0);
    uv_trim(out);
    return out;
}

// Res_w(p, q) as a univariate polynomial in u, by evaluation and Lagrange
// interpolation at points where neither leading w-coefficient vanishes.
QVec resultant_in_w(const Polynomial& p, const Polynomial& q) {
    auto pc = w_coefficients(p), qc = w_coefficients(q);
    int dp = static_cast<int>(pc.size()) - 1, dq = static_cast<int>(qc.size()) - 1;
    int du = p.degree_in(0) * dq + q.degree_in(0) * dp;  // generous degree bound

    std::vector<Rat> xs, ys;
    for (long u0 = 0; static_cast<int>(xs.size()) <= du; u0 = u0 > 0 ? -u0 : -u0 + 1) {
        Rat uu(u0);
        if (uv_eval(pc.back(), uu) == 0 || uv_eval(qc.back(), uu) == 0) continue;
        xs.push_back(uu);
        ys.push_back(uv_resultant(specialize_u(pc, uu), specialize_u(qc, uu)));
    }
    // Lagrange interpolation
    QVec res;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QVec basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = uv_mul(basis, QVec{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        res = uv_add(res, uv_scale(basis, ys[i] / denom));
    }
    return res;
}

// rational roots of a nonzero univariate polynomial, via the degree-one
// factors of its complete factorization
std::vector<Rat> rational_roots(const QVec& f) {
    std::vector<Rat> roots;
    if (uv_degree(f) < 1) return roots;
    Factorization fac = factor_univariate(qvec_to_poly(f));
    for (const auto& [q, mult] : fac.factors) {
        if (q.degree() != 1) continue;
        QVec v = poly_to_qvec(q);
        roots.push_back(-v[0] / v[1]);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rat> rational_roots_poly(const Polynomial& uni_in_var, int var) {
    QVec v;
    for (const auto& [m, c] : uni_in_var.terms()) {
        if (static_cast<std::size_t>(m[var]) >= v.size()) v.resize(m[var] + 1, Rat(0));
        v[m[var]] = c;
    }
    uv_trim(v);
    return rational_roots(v);
}

}  // namespace

LineSearchResult find_lines_on_surface(const Polynomial& f, int dir_height_bound) {
    if (f.nvars() != 3) throw std::invalid_argument("find_lines_on_surface: nvars must be 3");
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("find_lines_on_surface: nonconstant input required");
    if (dir_height_bound < 1) throw std::invalid_argument("direction height bound must be positive");

    Polynomial fi = f.scaled_to_integer().first;
    int d = fi.degree();
    Polynomial fd = fi.homogeneous_part(d);

    LineSearchResult result;
    std::set<std::string> seen;

    // primitive directions with f_d(v) = 0
    for (long a = -dir_height_bound; a <= dir_height_bound; ++a)
        for (long b = -dir_height_bound; b <= dir_height_bound; ++b)
            for (long c = -dir_height_bound; c <= dir_height_bound; ++c) {
                std::vector<Int> v{Int(a), Int(b), Int(c)};
                Int g = gcd_vec(v);
                if (g != 1) continue;
                bool pos = false;
                for (const auto& x : v) {
                    if (x == 0) continue;
                    pos = x > 0;
                    break;
                }
                if (!pos) continue;
                if (fd.evaluate_int(v) != 0) continue;

                int jstar = 0;
                while (v[jstar] == 0) ++jstar;
                int free1 = -1, free2 = -1;
                for (int i = 0; i < 3; ++i) {
                    if (i == jstar) continue;
                    (free1 < 0 ? free1 : free2) = i;
                }

                // f(a + t v) in Q[u, w, t]: u, w are the free base coords
                std::vector<Polynomial> images;
                for (int i = 0; i < 3; ++i) {
                    Polynomial base_i(3);
                    if (i == free1) base_i = Polynomial::variable(3, 1);
                    if (i == free2) base_i = Polynomial::variable(3, 2);
                    images.push_back(base_i + Polynomial::variable(3, 3) * Rat(v[i]));
                }
                Polynomial moved = fi.substitute(images);

                // t-coefficients c_i(u, w)
                std::vector<Polynomial> cs(d + 1, Polynomial(2));
                for (const auto& [m, coef] : moved.terms())
                    cs[m[2]].add_term(Monomial{m[0], m[1]}, coef);
                std::vector<Polynomial> system;
                for (int i = 0; i <= d; ++i)
                    if (!cs[i].is_zero()) system.push_back(cs[i]);
                if (system.empty()) throw std::logic_error("vanishing line system");

                const Polynomial* hmin = &system[0];
                for (const auto& h : system)
                    if (h.degree() < hmin->degree()) hmin = &h;

                if (hmin->is_constant()) continue;  // inconsistent system, no lines

                Factorization fac = factor_multivariate(*hmin);
                for (const auto& [q, mult] : fac.factors) {
                    // does q divide every equation?
                    bool divides_all = true;
                    const Polynomial* witness = nullptr;
                    for (const auto& h : system) {
                        if (!h.divide_exact(q)) {
                            divides_all = false;
                            witness = &h;
                            break;
                        }
                    }
                    if (divides_all) {
                        result.families.push_back(RulingFamily{v, jstar, q});
                        continue;
                    }

                    // isolated intersections of q = 0 with the witness
                    std::vector<std::pair<Rat, Rat>> points;
                    auto try_point = [&](const Rat& u0, const Rat& w0) {
                        std::vector<Rat> pt{u0, w0};
                        for (const auto& h : system)
                            if (h.evaluate(pt) != 0) return;
                        points.emplace_back(u0, w0);
                    };
                    if (q.degree_in(1) == 0) {
                        for (const Rat& u0 : rational_roots_poly(q, 0)) {
                            Polynomial spec = witness->substitute(
                                {Polynomial::constant(2, u0), Polynomial::variable(2, 2)});
                            if (spec.is_zero()) continue;  // excluded: q does not divide witness
                            for (const Rat& w0 : rational_roots_poly(spec, 1)) try_point(u0, w0);
                        }
                    } else if (q.degree_in(0) == 0) {
                        for (const Rat& w0 : rational_roots_poly(q, 1)) {
                            Polynomial spec = witness->substitute(
                                {Polynomial::variable(2, 1), Polynomial::constant(2, w0)});
                            if (spec.is_zero()) continue;
                            for (const Rat& u0 : rational_roots_poly(spec, 0)) try_point(u0, w0);
                        }
                    } else {
                        QVec res = resultant_in_w(q, *witness);
                        for (const Rat& u0 : rational_roots(res)) {
                            std::vector<QVec> qc = w_coefficients(q);
                            QVec quni = specialize_u(qc, u0);
                            if (quni.empty()) continue;
                            for (const Rat& w0 : rational_roots(quni)) try_point(u0, w0);
                            // q(u0, w) constant nonzero cannot host solutions
                        }
                    }

                    for (const auto& [u0, w0] : points) {
                        std::vector<Rat> base(3, Rat(0));
                        base[free1] = u0;
                        base[free2] = w0;
                        Line line(base, v);
                        // verify f(base + t dir) == 0 identically
                        std::vector<Polynomial> check;
                        for (int i = 0; i < 3; ++i)
                            check.push_back(Polynomial::constant(1, line.base()[i]) +
                                            Polynomial::variable(1, 1) * Rat(line.direction()[i]));
                        if (!fi.substitute(check).is_zero())
                            throw std::logic_error("line candidate failed verification");
                        std::string key = line.to_string();
                        if (seen.insert(key).second) result.lines.push_back(line);
                    }
                }
            }

    // drop isolated lines that belong to a reported family of the same
    // direction (their base lies on the family's base curve)
    if (!result.families.empty()) {
        std::vector<Line> kept;
        for (const auto& line : result.lines) {
            bool in_family = false;
            for (const auto& fam : result.families) {
                if (fam.direction != line.direction()) continue;
                // express the base in the family's transversal chart
                const auto& v = fam.direction;
                int jstar = fam.transversal_coordinate;
                // slide the base so coordinate jstar vanishes
                Rat t0 = -line.base()[jstar] / Rat(v[jstar]);
                std::vector<Rat> moved(3);
                for (int i = 0; i < 3; ++i) moved[i] = line.base()[i] + t0 * Rat(v[i]);
                std::vector<Rat> uv;
                for (int i = 0; i < 3; ++i)
                    if (i != jstar) uv.push_back(moved[i]);
                if (fam.base_curve.evaluate(uv) == 0) {
                    in_family = true;
                    break;
                }
            }
            if (!in_family) kept.push_back(line);
        }
        result.lines = std::move(kept);
    }

    std::sort(result.lines.begin(), result.lines.end());
    return result;
}

}  // namespace dgc
