#pragma once

#include "qhsa/twist.hpp"

namespace qhsa {

/// gamma, gamma-bar, the Drinfeld twist F_D and its inverse.
///
/// The counit legs of F_D equal eps(alpha), so the strict twistor is
/// F-bar_D = eps(beta) F_D with inverse eps(alpha) F_D^-1; both are exposed.
struct DrinfeldData {
    TensorElement gamma;
    TensorElement gamma_bar;
    TensorElement f_d;
    TensorElement f_d_inverse;
    Scalar eps_alpha;
    Scalar eps_beta;

    Twistor normalized() const;
};

/// gamma = (m (x) m)(1 (x) alpha (x) 1 (x) alpha)(S (x) 1 (x) S (x) 1)
///         (1 (x) T (x) 1)(T (x) 1 (x) 1) W
/// for W = (Phi^-1 (x) 1)(Delta (x) 1 (x) 1)Phi, or for the alternative
/// W = (1 (x) Phi)(1 (x) 1 (x) Delta)Phi^-1.
TensorElement gamma_from(const QhsaStructure& h, const TensorElement& w);
TensorElement gamma_primary(const QhsaStructure& h);
TensorElement gamma_alternative(const QhsaStructure& h);

/// gamma-bar = (m (x) m)(1 (x) beta S (x) 1 (x) beta S)(1 (x) T (x) 1)(1 (x) 1 (x) T) V
/// for V = (Delta (x) 1 (x) 1)Phi^-1 (Phi (x) 1), or for the alternative
/// V = (1 (x) 1 (x) Delta)Phi (1 (x) Phi^-1).
TensorElement gamma_bar_from(const QhsaStructure& h, const TensorElement& v);
TensorElement gamma_bar_primary(const QhsaStructure& h);
TensorElement gamma_bar_alternative(const QhsaStructure& h);

/// Sum over words of Delta(a) of (S (x) S)Delta^T(a1) gamma Delta(a2).
TensorElement gamma_conjugate(const QhsaStructure& h, const TensorElement& gamma, const TensorElement& a);
/// Sum over words of Delta(a) of Delta(a1) gamma-bar (S (x) S)Delta^T(a2).
TensorElement gamma_bar_conjugate(const QhsaStructure& h, const TensorElement& gamma_bar, const TensorElement& a);

/// gamma from the primary expression after confirming it matches the
/// alternative and satisfies the conjugation identity. Throws VerificationError.
TensorElement compute_gamma(const QhsaStructure& h);
TensorElement compute_gamma_bar(const QhsaStructure& h);

/// F_D = sum (S (x) S)Delta^T(X) gamma Delta(Y beta S(Z)) over Phi.
TensorElement drinfeld_twist_from(const QhsaStructure& h, const TensorElement& gamma);
/// F_D^-1 = sum Delta(Xbar) gamma-bar Delta'(S(Ybar) alpha Zbar) over Phi^-1.
TensorElement drinfeld_twist_inverse_from(const QhsaStructure& h, const TensorElement& gamma_bar);
/// F_D = sum Delta'(Xbar beta S(Ybar)) gamma Delta(Zbar) over Phi^-1.
TensorElement drinfeld_twist_alternative(const QhsaStructure& h, const TensorElement& gamma);
/// F_D^-1 = sum Delta(S(X) alpha Y) gamma-bar (S (x) S)Delta^T(Z) over Phi.
TensorElement drinfeld_twist_inverse_alternative(const QhsaStructure& h, const TensorElement& gamma_bar);

/// Computes gamma, gamma-bar, F_D and F_D^-1 and confirms that the two are
/// mutually inverse. Throws VerificationError.
DrinfeldData compute_drinfeld_twist(const QhsaStructure& h);

/// Identities of gamma, gamma-bar and F_D: both expressions of gamma and
/// gamma-bar, their conjugation identities, the inverse pair, the counit legs,
/// F_D Delta(alpha) = gamma, Delta(beta) F_D^-1 = gamma-bar and the
/// alternative expressions.
CheckReport verify_twist_elements(const QhsaStructure& h, const DrinfeldData& d);
/// Delta'(a) = F_D Delta(a) F_D^-1, Delta'(a) F_D = F_D Delta(a) and
/// F_D^-1 Delta'(a) = Delta(a) F_D^-1 for every basis a.
CheckReport verify_coproduct_conjugation(const QhsaStructure& h, const DrinfeldData& d);
/// Phi' = Phi_{F_D}, the defining identity
/// Phi' (1 (x) F_D)(1 (x) Delta)F_D = (F_D (x) 1)(Delta (x) 1)F_D Phi,
/// (Phi')^-1 (F_D (x) 1)(Delta (x) 1)gamma = (1 (x) F_D)(1 (x) Delta)gamma Phi^-1,
/// alpha_{F_D} = eps(alpha) S(beta) and beta_{F_D} = eps(beta) S(alpha).
CheckReport verify_primed_structure(const QhsaStructure& h, const DrinfeldData& d);
/// R' = (S (x) S)R equals F_D^T R F_D^-1, R' gamma = gamma^T R and the primed
/// structure is quasi-triangular. Throws MissingRMatrixError.
CheckReport verify_primed_r_matrix(const QhsaStructure& h, const DrinfeldData& d);
/// The primed structure against the structure twisted by F-bar_D: coproduct,
/// coassociator and R exactly, alpha and beta up to eps(alpha)^2 and eps(beta)^2.
CheckReport verify_primed_equivalence(const QhsaStructure& h, const DrinfeldData& d);

/// Every check above that applies to h.
CheckReport run_drinfeld_battery(const QhsaStructure& h, const DrinfeldData& d);

} // namespace qhsa
