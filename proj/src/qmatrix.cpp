#include "dgc/qmatrix.hpp"

#include <stdexcept>

namespace dgc {

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pivot, c));
        Rat inv = at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) /= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rat factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rat>> QMatrix::nullspace() const {
    QMatrix copy = *this;
    auto pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -copy.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: square matrix required");
    QMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
    QMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

Rat QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: square matrix required");
    QMatrix m = *this;
    Rat det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return Rat(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(col, c), m.at(pivot, c));
            det = -det;
        }
        det *= m.at(col, col);
        Rat inv = m.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat factor = m.at(r, col) / inv;
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

}  // namespace dgc
