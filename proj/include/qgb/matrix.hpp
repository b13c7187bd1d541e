#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgb/field.hpp"

namespace qgb {

// Dense exact matrix. All eliminations use the first nonzero entry as pivot
// (scanning rows top-down within a column, columns left-to-right), so every
// derived object (rref, rank, kernel, solutions) is deterministic.
class Matrix {
public:
    Matrix(const Field* f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field* f, std::size_t n);
    static Matrix from_columns(const Field* f, std::size_t rows,
                               const std::vector<std::vector<Scalar>>& cols);
    static Matrix from_rows(const Field* f, std::size_t cols,
                            const std::vector<std::vector<Scalar>>& rows);

    const Field* field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const;
    std::vector<Scalar> col(std::size_t j) const;

    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // this * v
    Matrix transpose() const;
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;

    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    std::size_t rank() const;
    std::optional<Matrix> inverse() const;
    // Columns form a deterministic basis of the right null space.
    Matrix kernel() const;
    // One solution of this * x = b, if consistent (free variables set to 0).
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    Matrix lift_field(const Field* target) const;
    bool operator==(const Matrix& o) const;

private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

} // namespace qgb
