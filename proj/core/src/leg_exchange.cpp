#include "qhsa/checks.hpp"

namespace qhsa {

std::pair<TensorElement, TensorElement> leg_exchange_sides(const QhsaStructure& h, const TensorElement& phi_inv,
                                                           int which, const TensorElement& a) {
    auto a3 = [&](std::uint32_t leg) { return embed_legs(a, {leg}, 3); };
    auto left_iterated = apply_delta(h, h.delta.apply(a), 0);
    auto right_iterated = apply_delta(h, h.delta.apply(a), 1);
    // Each side is an arity-3 product reduced to arity 2 by S on one leg,
    // a canonical element on the left of one leg and one multiplication.
    auto reduce = [&](const TensorElement& x, std::uint32_t s_leg, const TensorElement& c, std::uint32_t c_leg,
                      std::uint32_t m_leg) {
        return contract_legs(multiply_leg_left(c, apply_antipode(h, x, s_leg), c_leg), m_leg);
    };
    switch (which) {
    case 1: // X a (x) Y beta S(Z)
        return {reduce(h.phi * a3(0), 2, h.beta, 2, 1), reduce(left_iterated * h.phi, 2, h.beta, 2, 1)};
    case 2: // S(X) alpha Y (x) a Z
        return {reduce(a3(2) * h.phi, 0, h.alpha, 1, 0), reduce(h.phi * right_iterated, 0, h.alpha, 1, 0)};
    case 3: // a Xbar (x) S(Ybar) alpha Zbar
        return {reduce(a3(0) * phi_inv, 1, h.alpha, 2, 1), reduce(phi_inv * left_iterated, 1, h.alpha, 2, 1)};
    case 4: // Xbar beta S(Ybar) (x) Zbar a
        return {reduce(phi_inv * a3(2), 1, h.beta, 1, 0), reduce(right_iterated * phi_inv, 1, h.beta, 1, 0)};
    default:
        throw DomainError("leg exchange identity index must be 1..4");
    }
}

CheckReport check_leg_exchange(const QhsaStructure& h) {
    check_shapes(h);
    CheckReport report;
    auto phi_inv = try_invert(h.phi);
    for (int which = 1; which <= 4; ++which) {
        std::string id = "phi_leg_exchange." + std::to_string(which);
        if (!phi_inv) {
            report.skip(id, "coassociator is not invertible");
            continue;
        }
        EqualityCheck check(report, id);
        for (std::uint32_t i = 0; i < h.algebra->dimension() && !check.failed(); ++i) {
            auto [lhs, rhs] = leg_exchange_sides(h, *phi_inv, which, basis_element(h, i));
            check.compare(lhs, rhs, {i});
        }
    }
    return report;
}

} // namespace qhsa
