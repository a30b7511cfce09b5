#pragma once

#include <optional>
#include <string>

#include "qhsa/report.hpp"
#include "qhsa/structure_map.hpp"

namespace qhsa {

/// A Z2-graded quasi-Hopf superalgebra, optionally quasi-triangular.
///
/// Nothing is enforced on construction: validate_structure and the check
/// functions report on the axioms so that broken inputs can be diagnosed.
struct QhsaStructure {
    std::string name;
    AlgebraPtr algebra;
    StructureMap delta;    // out arity 2
    StructureMap epsilon;  // out arity 0
    StructureMap antipode; // out arity 1
    TensorElement phi;     // arity 3
    TensorElement alpha;   // arity 1
    TensorElement beta;    // arity 1
    std::optional<TensorElement> r_matrix; // arity 2
};

/// Throws DomainError or FieldMismatchError unless every component has the
/// expected arity and lives over the structure's algebra.
void check_shapes(const QhsaStructure& h);

/// Throws SingularError when the coassociator is not invertible.
TensorElement phi_inverse(const QhsaStructure& h);
/// Throws SingularError when the antipode is not bijective.
StructureMap antipode_inverse(const QhsaStructure& h);

TensorElement apply_delta(const QhsaStructure& h, const TensorElement& x, std::uint32_t leg);
TensorElement apply_epsilon(const QhsaStructure& h, const TensorElement& x, std::uint32_t leg);
TensorElement apply_antipode(const QhsaStructure& h, const TensorElement& x, std::uint32_t leg);
/// Delta^T = T Delta.
TensorElement opposite_coproduct(const QhsaStructure& h, const TensorElement& a);
/// epsilon of an arity-1 element.
Scalar counit_value(const QhsaStructure& h, const TensorElement& a);

TensorElement unit_tensor(const QhsaStructure& h, std::uint32_t arity);
TensorElement basis_element(const QhsaStructure& h, std::uint32_t index);

/// Parity, homomorphism and invertibility invariants of every component.
CheckReport validate_structure(const QhsaStructure& h);

} // namespace qhsa
