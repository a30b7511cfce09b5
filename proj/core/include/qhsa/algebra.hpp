#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qhsa/scalar.hpp"

namespace qhsa {

class CheckReport;

/// One term of a sparse vector over the basis: coefficient times e_index.
struct Term {
    std::uint32_t index;
    Scalar coeff;
};

/// Entry of a multiplication table: e_left * e_right has coefficient `coeff` at e_result.
struct ProductEntry {
    std::uint32_t left;
    std::uint32_t right;
    std::uint32_t result;
    Scalar coeff;
};

/// Finite-dimensional Z2-graded algebra presented by a homogeneous basis
/// e_0..e_{d-1}, a parity per basis vector, structure constants and a unit.
///
/// Construction only checks shapes and field consistency; the algebra axioms
/// are checked by validate_algebra so that broken inputs can still be reported on.
class GradedAlgebra {
public:
    GradedAlgebra(FieldSpec field, std::vector<std::uint8_t> parity, std::vector<Scalar> unit,
                  const std::vector<ProductEntry>& products);

    FieldSpec field() const { return field_; }
    std::uint32_t dimension() const { return static_cast<std::uint32_t>(parity_.size()); }
    std::uint8_t parity(std::uint32_t index) const { return parity_.at(index); }
    std::span<const std::uint8_t> parities() const { return parity_; }

    /// Coordinates of the unit element.
    std::span<const Scalar> unit() const { return unit_; }
    /// e_left * e_right as sparse terms with nonzero coefficients, sorted by index.
    std::span<const Term> product(std::uint32_t left, std::uint32_t right) const;

    Scalar zero() const { return Scalar(field_); }
    Scalar one() const { return Scalar::integer(1, field_); }
    Scalar integer(long v) const { return Scalar::integer(v, field_); }

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

private:
    FieldSpec field_;
    std::vector<std::uint8_t> parity_;
    std::vector<Scalar> unit_;
    std::vector<std::vector<Term>> table_; // left * dim + right
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// True when both pointers refer to the same algebra (identical object or equal contents).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Checks associativity, the unit laws, that the unit is even and that the
/// product respects the grading.
CheckReport validate_algebra(const AlgebraPtr& algebra);

} // namespace qhsa
