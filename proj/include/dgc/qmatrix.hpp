#pragma once

#include <optional>
#include <vector>

#include "dgc/numeric.hpp"

namespace dgc {

/// Dense matrix over Q, just big enough for the exact rank/nullspace/solve
/// work the library needs. Row-major.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of the right nullspace (each vector has cols() entries).
    /// Deterministic: computed from the rref with free variables set to 1
    /// in ascending column order.
    std::vector<std::vector<Rat>> nullspace() const;

    /// Solve A x = b; empty when inconsistent. The returned solution sets
    /// all free variables to zero.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    /// Inverse of a square nonsingular matrix; empty if singular.
    std::optional<QMatrix> inverse() const;

    /// Determinant of a square matrix (fraction Gaussian elimination).
    Rat determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

}  // namespace dgc
