#pragma once

#include <optional>

#include "qhsa/structure.hpp"

namespace qhsa {

/// An element F of H (x) H together with its inverse.
struct Twistor {
    TensorElement element;
    TensorElement inverse;
};

/// A twistor failed check_twistor; the report carries the failing entries.
class InvalidTwistorError : public Error {
public:
    InvalidTwistorError(const std::string& what, CheckReport report)
        : Error(what), report_(std::move(report)) {}
    const CheckReport& report() const { return report_; }

private:
    CheckReport report_;
};

/// F even, two-sided invertible and (1 (x) eps)F = (eps (x) 1)F = 1.
CheckReport check_twistor(const QhsaStructure& h, const TensorElement& f);

/// (F (x) 1)(Delta (x) 1)F = (1 (x) F)(1 (x) Delta)F.
CheckReport check_cocycle(const QhsaStructure& h, const Twistor& f);

/// Validates F and computes its inverse. A declared inverse is checked
/// against F instead of being recomputed. Throws InvalidTwistorError.
Twistor make_twistor(const QhsaStructure& h, const TensorElement& f,
                     const std::optional<TensorElement>& declared_inverse = std::nullopt);

/// The twisted components for any invertible F, without validating F:
/// Delta_F(a) = F Delta(a) F^-1,
/// Phi_F = (F (x) 1)(Delta (x) 1)F Phi (1 (x) Delta)F^-1 (1 (x) F^-1),
/// alpha_F = m (1 (x) alpha)(S (x) 1)F^-1, beta_F = m (1 (x) beta)(1 (x) S)F,
/// R_F = F^T R F^-1.
QhsaStructure twist_components(const QhsaStructure& h, const TensorElement& f, const TensorElement& f_inverse);

/// Twist by a validated twistor. Throws InvalidTwistorError if F fails check_twistor.
QhsaStructure twist_structure(const QhsaStructure& h, const Twistor& f);

/// Componentwise equality: coproduct per basis element, counit, antipode,
/// coassociator, alpha, beta and R. Entry ids are prefix + ".delta" etc.
CheckReport compare_structures(const QhsaStructure& a, const QhsaStructure& b, const std::string& prefix);

/// (H_F)_G against H_{G F}, componentwise.
CheckReport twist_composition_check(const QhsaStructure& h, const Twistor& f, const Twistor& g);

/// Delta^T = T Delta, Phi^T = Phi^-1_321, antipode S^-1, alpha^T = S^-1(alpha),
/// beta^T = S^-1(beta), R^T = T R. Throws SingularError for a non-bijective antipode.
QhsaStructure opposite_structure(const QhsaStructure& h);

/// Twisting by R itself: Delta_R = Delta^T, Phi_R = Phi^T and R_R = R^T.
/// alpha_R and beta_R are recorded as values only. Throws MissingRMatrixError.
CheckReport verify_twist_by_r(const QhsaStructure& h);

/// Delta'(a) = (S (x) S) Delta^T(S^-1 a), Phi' = (S (x) S (x) S) Phi_321,
/// alpha' = S(beta), beta' = S(alpha), R' = (S (x) S) R.
QhsaStructure prime_structure(const QhsaStructure& h);
/// The primed coproduct of one element.
TensorElement primed_coproduct(const QhsaStructure& h, const StructureMap& s_inverse, const TensorElement& a);

/// The opposite of H_F against (H^T)_{F^T}, componentwise.
CheckReport check_opposite_twist_compat(const QhsaStructure& h, const Twistor& f);

/// Twisting by cF leaves Phi_F, Delta_F and R_F unchanged and scales alpha_F by
/// c^-1 and beta_F by c.
CheckReport check_rescaling_covariance(const QhsaStructure& h, const Twistor& f, const Scalar& c);

/// Graded tensor product A (x) B with basis index i_A * dim B + i_B.
/// Phi, alpha and beta come from the factor with the nontrivial coassociator;
/// R is present only when both factors carry one. Throws FieldMismatchError
/// for different fields and DomainError when both coassociators are nontrivial.
QhsaStructure tensor_product_structure(const QhsaStructure& a, const QhsaStructure& b);

/// Interleaves x over A and y over B (same arity n) into
/// (x1 (x) y1) (x) ... (x) (xn (x) yn) over the product algebra, with the
/// Koszul sign of moving each y_j past x_i for i > j.
TensorElement interleave(const AlgebraPtr& product, const TensorElement& x, const TensorElement& y);

} // namespace qhsa
