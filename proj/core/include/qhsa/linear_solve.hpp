#pragma once

#include <optional>
#include <vector>

#include "qhsa/scalar.hpp"

namespace qhsa {

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

/// Unique solution of a square system A x = b, or nullopt if A is singular.
std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> invert_matrix(Matrix a);

std::size_t matrix_rank(Matrix a);

} // namespace qhsa
