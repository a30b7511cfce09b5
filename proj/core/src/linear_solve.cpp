#include "qhsa/linear_solve.hpp"

#include <utility>

namespace qhsa {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(field)) {}

namespace {

// Gauss-Jordan on the augmented matrix [a | rhs]. Returns the rank of a and
// leaves a in reduced row echelon form with matching row operations on rhs.
std::size_t eliminate(Matrix& a, Matrix* rhs) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(rank, c));
            if (rhs) {
                for (std::size_t c = 0; c < rhs->cols(); ++c) std::swap(rhs->at(pivot, c), rhs->at(rank, c));
            }
        }
        Scalar inv = a.at(rank, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(rank, c) *= inv;
        if (rhs) {
            for (std::size_t c = 0; c < rhs->cols(); ++c) rhs->at(rank, c) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!a.at(rank, c).is_zero()) a.at(r, c) -= factor * a.at(rank, c);
            }
            if (rhs) {
                for (std::size_t c = 0; c < rhs->cols(); ++c) {
                    if (!rhs->at(rank, c).is_zero()) rhs->at(r, c) -= factor * rhs->at(rank, c);
                }
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b) {
    if (a.rows() != a.cols() || b.size() != a.rows()) {
        throw DomainError("solve_linear expects a square system");
    }
    Matrix rhs(b.size(), 1, a.field());
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = std::move(b[i]);
    if (eliminate(a, &rhs) < a.rows()) {
        return std::nullopt;
    }
    std::vector<Scalar> x;
    x.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) x.push_back(rhs.at(i, 0));
    return x;
}

std::optional<Matrix> invert_matrix(Matrix a) {
    if (a.rows() != a.cols()) {
        throw DomainError("invert_matrix expects a square matrix");
    }
    Matrix rhs(a.rows(), a.rows(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) rhs.at(i, i) = Scalar::integer(1, a.field());
    if (eliminate(a, &rhs) < a.rows()) {
        return std::nullopt;
    }
    return rhs;
}

std::size_t matrix_rank(Matrix a) {
    return eliminate(a, nullptr);
}

} // namespace qhsa
