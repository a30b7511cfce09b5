#pragma once

#include "qhsa/structure.hpp"

namespace qhsa {

/// A quasi-triangular check was requested on a structure without R.
class MissingRMatrixError : public Error {
public:
    using Error::Error;
};

/// Coassociativity up to conjugation by Phi, the pentagon identity, the counit
/// laws and the counit identities of Phi on the middle and outer legs.
CheckReport check_quasi_bialgebra(const QhsaStructure& h);

/// The alpha and beta antipode rules, the two coassociator identities and the
/// derived scalar identities eps(alpha) eps(beta) = eps(alpha beta) = 1 and
/// eps(S(a)) = eps(a).
CheckReport check_antipode_axioms(const QhsaStructure& h);

/// Intertwining Delta^T(a) R = R Delta(a), the two coproduct identities of R and
/// the counit identities of R. Throws MissingRMatrixError.
CheckReport check_quasi_triangular(const QhsaStructure& h);

/// R^{-1} = T R. Throws MissingRMatrixError.
CheckReport check_triangular(const QhsaStructure& h);

/// The graded quasi-quantum Yang-Baxter equation
/// R12 Phi^-1_231 R13 Phi_132 R23 Phi^-1 = Phi^-1_321 R23 Phi_312 R13 Phi^-1_213 R12.
/// Throws MissingRMatrixError.
CheckReport check_qqybe(const QhsaStructure& h);

/// The four arity-4 rearrangements of the pentagon expressing Phi (x) 1,
/// 1 (x) Phi, Phi^-1 (x) 1 and 1 (x) Phi^-1 as four-factor products.
CheckReport check_pentagon_consequences(const QhsaStructure& h);

/// The four identities moving a basis element a across the legs of Phi or
/// Phi^-1 combined with alpha, beta and S, for every basis a.
CheckReport check_leg_exchange(const QhsaStructure& h);

/// For every basis word eta of H (x) H and basis a:
///   m (1 (x) alpha)(S (x) 1){Delta(a) eta} = eps(a) m (1 (x) alpha)(S (x) 1) eta
///   m (1 (x) beta)(1 (x) S){eta Delta(a)}  = eps(a) m (1 (x) beta)(1 (x) S) eta
CheckReport check_eta_absorption(const QhsaStructure& h);

/// The individual sides of the leg-exchange identities, exposed for testing.
/// `which` is 1..4; returns {lhs, rhs} for basis element a.
std::pair<TensorElement, TensorElement> leg_exchange_sides(const QhsaStructure& h, const TensorElement& phi_inv,
                                                           int which, const TensorElement& a);

/// m (1 (x) alpha)(S (x) 1) x and m (1 (x) beta)(1 (x) S) x for arity-2 x.
TensorElement alpha_contraction(const QhsaStructure& h, const TensorElement& x);
TensorElement beta_contraction(const QhsaStructure& h, const TensorElement& x);

} // namespace qhsa
