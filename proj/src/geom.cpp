#include "dgc/geom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dgc/factor.hpp"
#include "dgc/qmatrix.hpp"

namespace dgc {

namespace {

// rows = monomials, columns = the n partials
QMatrix partials_matrix(const Polynomial& f) {
    int n = f.nvars();
    std::vector<Polynomial> partials;
    partials.reserve(n);
    for (int v = 0; v < n; ++v) partials.push_back(f.partial_derivative(v));

    std::map<Monomial, std::size_t, GrlexLess> rows;
    for (const auto& p : partials)
        for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;

    QMatrix A(rows.size(), n);
    for (int v = 0; v < n; ++v)
        for (const auto& [m, c] : partials[v].terms()) A.at(rows[m], v) = c;
    return A;
}

}  // namespace

int partials_span_dim(const Polynomial& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("partials_span_dim: nonconstant input required");
    return static_cast<int>(partials_matrix(f).rank());
}

bool is_ncc(const Polynomial& f) {
    if (f.nvars() < 3) throw std::invalid_argument("is_ncc requires nvars >= 3");
    return partials_span_dim(f) >= 3;
}

bool CylinderCertificate::verifies(const Polynomial& f) const {
    return g.substitute({ell1.to_polynomial(), ell2.to_polynomial()}) == f;
}

std::optional<CylinderCertificate> extract_cylinder(const Polynomial& f) {
    if (f.nvars() < 3) throw std::invalid_argument("extract_cylinder requires nvars >= 3");
    int n = f.nvars();
    QMatrix A = partials_matrix(f);
    auto kernel = A.nullspace();  // coefficient vectors c with sum c_i df/dx_i = 0
    int s = n - static_cast<int>(kernel.size());
    if (s >= 3) return std::nullopt;

    // assemble an invertible M whose trailing columns span the kernel; the
    // change x = M y makes g(y) = f(M y) depend only on y1 (and y2 when s=2)
    QMatrix M(n, n);
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (int i = 0; i < n; ++i) M.at(i, s + static_cast<int>(j)) = kernel[j][i];

    // complete with standard basis vectors, greedily keeping full rank
    int placed = 0;
    for (int e = 0; e < n && placed < s; ++e) {
        M.at(e, placed) = 1;
        QMatrix probe(n, placed + 1 + static_cast<int>(kernel.size()));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= placed; ++j) probe.at(i, j) = M.at(i, j);
            for (std::size_t j = 0; j < kernel.size(); ++j)
                probe.at(i, placed + 1 + static_cast<int>(j)) = kernel[j][i];
        }
        if (probe.rank() == static_cast<std::size_t>(placed + 1) + kernel.size())
            ++placed;
        else
            M.at(e, placed) = 0;
    }
    if (placed != s) throw std::logic_error("kernel completion failed");

    auto inv = M.inverse();
    if (!inv) throw std::logic_error("change of coordinates not invertible");

    // g over the y-coordinates; by construction it involves only y1..ys
    std::vector<Polynomial> m_images;
    m_images.reserve(n);
    for (int i = 0; i < n; ++i) {
        Polynomial img(n);
        for (int j = 0; j < n; ++j) {
            if (M.at(i, j) == 0) continue;
            Monomial mon(n, 0);
            mon[j] = 1;
            img.add_term(mon, M.at(i, j));
        }
        m_images.push_back(img);
    }
    Polynomial g_full = f.substitute(m_images);

    // rows 1..2 of M^{-1} give the linear forms with f = g(l1, l2)
    std::vector<Rat> row1(n), row2(n);
    for (int j = 0; j < n; ++j) {
        row1[j] = inv->at(0, j);
        row2[j] = s >= 2 ? inv->at(1, j) : Rat(0);
    }
    if (s < 2) {
        // any form independent of row1 will do; g will not use it
        for (int e = 0; e < n; ++e) {
            std::vector<Rat> cand(n, Rat(0));
            cand[e] = 1;
            QMatrix probe(2, n);
            for (int j = 0; j < n; ++j) {
                probe.at(0, j) = row1[j];
                probe.at(1, j) = cand[j];
            }
            if (probe.rank() == 2) {
                row2 = cand;
                break;
            }
        }
    }

    LinearForm l1 = LinearForm::from_rational(row1);
    LinearForm l2 = LinearForm::from_rational(row2);

    // l1 = lambda1 * row1; compensate inside g so that f = g2(l1(x), l2(x))
    auto scale_of = [n](const LinearForm& l, const std::vector<Rat>& row) {
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) return Rat(l.coeffs()[j]) / row[j];
        throw std::logic_error("zero row");
    };
    Rat lam1 = scale_of(l1, row1);
    Rat lam2 = scale_of(l2, row2);

    Polynomial u = Polynomial::variable(2, 1) * (Rat(1) / lam1);
    Polynomial v = Polynomial::variable(2, 2) * (Rat(1) / lam2);
    std::vector<Polynomial> y_images;
    y_images.reserve(n);
    y_images.push_back(u);
    y_images.push_back(s >= 2 ? v : Polynomial(2));
    for (int j = 2; j < n; ++j) y_images.push_back(Polynomial(2));  // unused
    Polynomial g2 = g_full.substitute(y_images);

    CylinderCertificate cert{l1, l2, g2};
    if (!cert.verifies(f)) throw std::logic_error("cylinder certificate failed verification");
    return cert;
}

Polynomial slice(const Polynomial& f, const SliceSpec& s) {
    int n = f.nvars();
    if (s.ell.nvars() != n || s.ellPrime.nvars() != n)
        throw std::invalid_argument("slice: form dimension mismatch");
    if (!linearly_independent(s.ell, s.ellPrime))
        throw std::invalid_argument("slice: dependent linear forms");
    if (n < 2) throw std::invalid_argument("slice needs nvars >= 2");

    std::vector<Int> w(n);
    for (int i = 0; i < n; ++i) w[i] = s.ell.coeffs()[i] - s.t * s.ellPrime.coeffs()[i];
    Int g = gcd_vec(w);
    if (g == 0) throw std::invalid_argument("slice: degenerate spec");
    for (auto& c : w) c /= g;
    Rat b = s.b / Rat(g);

    // prefer solving for the last variable carrying a unit coefficient
    int pivot = -1;
    for (int i = n - 1; i >= 0; --i)
        if (w[i] == 1 || w[i] == -1) {
            pivot = i;
            break;
        }

    std::vector<Polynomial> images;
    images.reserve(n);
    if (pivot >= 0) {
        // x_pivot = (b - sum_{k != pivot} w_k x_k) / w_pivot
        Polynomial expr = Polynomial::constant(n - 1, b);
        int idx = 1;
        std::vector<Polynomial> vars;
        for (int k = 0; k < n; ++k) {
            if (k == pivot) {
                vars.push_back(Polynomial(n - 1));
                continue;
            }
            Polynomial xk = Polynomial::variable(n - 1, idx++);
            vars.push_back(xk);
            if (w[k] != 0) expr -= xk * Rat(w[k]);
        }
        expr = expr * Rat(Int(1), w[pivot]);
        for (int k = 0; k < n; ++k) images.push_back(k == pivot ? expr : vars[k]);
        return f.substitute(images);
    }

    // general case: column-reduce w to a unit vector, tracking the inverse
    // change of coordinates x = V z with z_n = w . x
    std::vector<std::vector<Int>> V(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) V[i][i] = 1;
    std::vector<Int> r = w;
    for (int i = 1; i < n; ++i) {
        if (r[i] == 0) continue;
        Int gg, sc, tc;
        mpz_gcdext(gg.get_mpz_t(), sc.get_mpz_t(), tc.get_mpz_t(), r[0].get_mpz_t(),
                   r[i].get_mpz_t());
        Int a = r[0] / gg, c = r[i] / gg;
        for (int row = 0; row < n; ++row) {
            Int col0 = V[row][0], coli = V[row][i];
            V[row][0] = sc * col0 + tc * coli;
            V[row][i] = -c * col0 + a * coli;
        }
        r[0] = gg;
        r[i] = 0;
    }
    if (r[0] == -1) {
        for (int row = 0; row < n; ++row) V[row][0] = -V[row][0];
        r[0] = 1;
    }
    if (r[0] != 1) throw std::logic_error("primitive vector reduction failed");
    // move the unit column to the back: columns 0..n-2 then annihilate w
    for (int row = 0; row < n; ++row) std::rotate(V[row].begin(), V[row].begin() + 1, V[row].end());

    for (int k = 0; k < n; ++k) {
        Polynomial img = Polynomial::constant(n - 1, b * Rat(V[k][n - 1]));
        for (int j = 0; j < n - 1; ++j)
            if (V[k][j] != 0) img += Polynomial::variable(n - 1, j + 1) * Rat(V[k][j]);
        images.push_back(img);
    }
    return f.substitute(images);
}

std::vector<LinearForm> primitive_forms_of_height(int nvars, int h) {
    if (h < 1) throw std::invalid_argument("height must be positive");
    std::vector<std::vector<Int>> raw;
    std::vector<Int> v(nvars, Int(0));
    auto rec = [&](auto&& self, int pos, bool has_h) -> void {
        if (pos == nvars) {
            if (!has_h) return;
            Int g = gcd_vec(v);
            if (g != 1) return;
            for (const auto& c : v) {
                if (c == 0) continue;
                if (c < 0) return;  // canonical sign: first nonzero positive
                break;
            }
            raw.push_back(v);
            return;
        }
        for (long c = -h; c <= h; ++c) {
            v[pos] = c;
            self(self, pos + 1, has_h || c == h || c == -h);
        }
    };
    rec(rec, 0, false);

    // canonical order: fewer nonzero entries first, then later-variable
    // support first (reversed coefficient tuple, descending)
    std::sort(raw.begin(), raw.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
        int na = 0, nb = 0;
        for (const auto& c : a) na += (c != 0);
        for (const auto& c : b) nb += (c != 0);
        if (na != nb) return na < nb;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    });
    std::vector<LinearForm> out;
    out.reserve(raw.size());
    for (auto& c : raw) out.emplace_back(std::move(c));
    return out;
}

GoodSlice find_good_slice(const Polynomial& f, int r, int height_bound, int b_samples) {
    int n = f.nvars();
    if (n < 4) throw std::invalid_argument("find_good_slice requires nvars >= 4");
    if (r < 1 || height_bound < 1 || b_samples < 1)
        throw std::invalid_argument("find_good_slice: positive r, height_bound, b_samples required");
    if (!is_ncc(f)) throw std::invalid_argument("find_good_slice: f must be NCC");
    int d = f.degree();
    Polynomial fd = f.homogeneous_part(d);
    if (!is_r_irreducible(fd, r))
        throw std::invalid_argument("find_good_slice: top form must be r-irreducible");

    std::vector<LinearForm> forms;
    long tried = 0;
    for (int h = 1; h <= height_bound; ++h) {
        std::size_t prev = forms.size();
        auto layer = primitive_forms_of_height(n, h);
        forms.insert(forms.end(), layer.begin(), layer.end());

        // pairs with max height exactly h: at least one side from the new layer
        for (std::size_t i = 0; i < forms.size(); ++i) {
            for (std::size_t j = 0; j < forms.size(); ++j) {
                if (i == j) continue;
                if (i < prev && j < prev) continue;
                const LinearForm& ell = forms[i];
                const LinearForm& ellp = forms[j];
                // t in the fixed order 0, 1, -1, 2, -2, ...
                for (long tt = 0; std::abs(tt) <= height_bound;
                     tt = tt > 0 ? -tt : -tt + 1) {
                    ++tried;
                    SliceSpec spec{ell, ellp, Int(tt), Rat(0)};
                    Polynomial top_slice = slice(fd, spec);
                    if (top_slice.is_zero() || top_slice.is_constant()) continue;
                    if (!is_r_irreducible(top_slice, r)) continue;

                    std::vector<Int> bad;
                    int good = 0;
                    // b sampled in the same fixed order 0, 1, -1, 2, -2, ...
                    for (long bb = 0, taken = 0; taken < b_samples;
                         bb = bb > 0 ? -bb : -bb + 1, ++taken) {
                        SliceSpec sb{ell, ellp, Int(tt), Rat(bb)};
                        Polynomial fs = slice(f, sb);
                        bool ok = !fs.is_zero() && !fs.is_constant() && is_ncc(fs);
                        if (ok)
                            ++good;
                        else
                            bad.push_back(Int(bb));
                    }
                    if (good == 0) continue;
                    return GoodSlice{spec, std::move(bad), tried};
                }
            }
        }
    }
    throw search_exhausted("find_good_slice: no candidate within height bound", height_bound);
}

}  // namespace dgc
