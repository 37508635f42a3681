#pragma once

#include "sschr/scalars.hpp"

#include <cstddef>
#include <vector>

namespace sschr {

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<GaussianRational> row(std::size_t r) const;
    void appendRow(const std::vector<GaussianRational>& row);

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& x) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

struct ReducedEchelon {
    /// Nonzero rows of the reduced row echelon form, pivots normalized to 1.
    std::vector<std::vector<GaussianRational>> rows;
    /// Pivot column of each row, strictly increasing.
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Forward elimination is fraction-free (Bareiss
/// style over the Gaussian integers after clearing denominators row by row);
/// only the final normalization divides.
ReducedEchelon reducedEchelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Nullspace basis. Each vector has a 1 in one free column and zeros in the
/// other free columns, so the first nonzero entry of every vector is 1.
std::vector<std::vector<GaussianRational>> kernel(const Matrix& m);

/// Determinant of a square matrix by fraction-free elimination.
GaussianRational determinant(const Matrix& m);

bool isZeroVector(const std::vector<GaussianRational>& v);

}  // namespace sschr
