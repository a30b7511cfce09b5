#include "qhsa/drinfeld.hpp"

#include "qhsa/checks.hpp"

namespace qhsa {

namespace {

// Sum of coeff * images[index] over the terms of an arity-1 element.
TensorElement apply_linear(const std::vector<TensorElement>& images, const TensorElement& v, std::uint32_t arity) {
    TensorElement out(v.algebra(), arity);
    for (const auto& [k, c] : v.terms()) {
        out += c * images[static_cast<std::size_t>(k)];
    }
    return out;
}

// Per-basis images of the maps that appear in the twist formulas.
struct CoproductImages {
    std::vector<TensorElement> delta;      // Delta(e_i)
    std::vector<TensorElement> anti;       // (S (x) S) Delta^T(e_i)
    std::vector<TensorElement> primed;     // Delta'(e_i)

    explicit CoproductImages(const QhsaStructure& h) {
        auto s_inv = antipode_inverse(h);
        for (std::uint32_t i = 0; i < h.algebra->dimension(); ++i) {
            delta.push_back(h.delta.image(i));
            anti.push_back(apply_map_all_legs(flip(h.delta.image(i)), h.antipode));
            primed.push_back(primed_coproduct(h, s_inv, basis_element(h, i)));
        }
    }
};

// Sum over the words (x, y, z) of t of c * left(x, y) * middle * right(y, z).
template <typename Left, typename Right>
TensorElement three_leg_sum(const TensorElement& t, const TensorElement& middle, Left left, Right right) {
    TensorElement out(t.algebra(), 2);
    for (const auto& [k, c] : t.terms()) {
        Word w = t.decode(k);
        out += c * (left(w) * middle * right(w));
    }
    return out;
}

TensorElement scalar_unit(const QhsaStructure& h, const Scalar& s, std::uint32_t arity) {
    return s * unit_tensor(h, arity);
}

void require_r(const QhsaStructure& h) {
    if (!h.r_matrix) throw MissingRMatrixError("structure '" + h.name + "' has no R-matrix");
}

std::string joined(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
    return out;
}

void summary_entry(CheckReport& report, const std::string& id, const CheckReport& sub) {
    if (sub.passed()) {
        report.pass(id);
    } else {
        report.fail(id, Witness{{}, std::nullopt, "failed: " + joined(sub.failed_ids())});
    }
}

} // namespace

Twistor DrinfeldData::normalized() const {
    return Twistor{eps_beta * f_d, eps_alpha * f_d_inverse};
}

TensorElement gamma_from(const QhsaStructure& h, const TensorElement& w) {
    auto x = permute_legs(w, {1, 2, 0, 3});
    x = apply_antipode(h, apply_antipode(h, x, 0), 2);
    x = multiply_leg_left(h.alpha, multiply_leg_left(h.alpha, x, 1), 3);
    return contract_legs(contract_legs(x, 0), 1);
}

TensorElement gamma_primary(const QhsaStructure& h) {
    return gamma_from(h, tensor_unit_right(phi_inverse(h)) * apply_delta(h, h.phi, 0));
}

TensorElement gamma_alternative(const QhsaStructure& h) {
    return gamma_from(h, tensor_unit_left(h.phi) * apply_delta(h, phi_inverse(h), 2));
}

TensorElement gamma_bar_from(const QhsaStructure& h, const TensorElement& v) {
    auto x = permute_legs(v, {0, 3, 1, 2});
    x = apply_antipode(h, apply_antipode(h, x, 1), 3);
    x = multiply_leg_left(h.beta, multiply_leg_left(h.beta, x, 1), 3);
    return contract_legs(contract_legs(x, 0), 1);
}

TensorElement gamma_bar_primary(const QhsaStructure& h) {
    return gamma_bar_from(h, apply_delta(h, phi_inverse(h), 0) * tensor_unit_right(h.phi));
}

TensorElement gamma_bar_alternative(const QhsaStructure& h) {
    return gamma_bar_from(h, apply_delta(h, h.phi, 2) * tensor_unit_left(phi_inverse(h)));
}

TensorElement gamma_conjugate(const QhsaStructure& h, const TensorElement& gamma, const TensorElement& a) {
    CoproductImages img(h);
    return three_leg_sum(
        h.delta.apply(a), gamma, [&](const Word& w) { return img.anti[w[0]]; },
        [&](const Word& w) { return img.delta[w[1]]; });
}

TensorElement gamma_bar_conjugate(const QhsaStructure& h, const TensorElement& gamma_bar, const TensorElement& a) {
    CoproductImages img(h);
    return three_leg_sum(
        h.delta.apply(a), gamma_bar, [&](const Word& w) { return img.delta[w[0]]; },
        [&](const Word& w) { return img.anti[w[1]]; });
}

TensorElement compute_gamma(const QhsaStructure& h) {
    auto gamma = gamma_primary(h);
    if (!(gamma == gamma_alternative(h))) {
        throw VerificationError("the two expressions for gamma disagree");
    }
    for (std::uint32_t i = 0; i < h.algebra->dimension(); ++i) {
        auto a = basis_element(h, i);
        if (!(gamma_conjugate(h, gamma, a) == counit_value(h, a) * gamma)) {
            throw VerificationError("gamma violates its conjugation identity at e" + std::to_string(i));
        }
    }
    return gamma;
}

TensorElement compute_gamma_bar(const QhsaStructure& h) {
    auto gamma_bar = gamma_bar_primary(h);
    if (!(gamma_bar == gamma_bar_alternative(h))) {
        throw VerificationError("the two expressions for gamma-bar disagree");
    }
    for (std::uint32_t i = 0; i < h.algebra->dimension(); ++i) {
        auto a = basis_element(h, i);
        if (!(gamma_bar_conjugate(h, gamma_bar, a) == counit_value(h, a) * gamma_bar)) {
            throw VerificationError("gamma-bar violates its conjugation identity at e" + std::to_string(i));
        }
    }
    return gamma_bar;
}

TensorElement drinfeld_twist_from(const QhsaStructure& h, const TensorElement& gamma) {
    CoproductImages img(h);
    return three_leg_sum(
        h.phi, gamma, [&](const Word& w) { return img.anti[w[0]]; },
        [&](const Word& w) {
            auto inner = basis_element(h, w[1]) * h.beta * h.antipode.image(w[2]);
            return apply_linear(img.delta, inner, 2);
        });
}

TensorElement drinfeld_twist_inverse_from(const QhsaStructure& h, const TensorElement& gamma_bar) {
    CoproductImages img(h);
    return three_leg_sum(
        phi_inverse(h), gamma_bar, [&](const Word& w) { return img.delta[w[0]]; },
        [&](const Word& w) {
            auto inner = h.antipode.image(w[1]) * h.alpha * basis_element(h, w[2]);
            return apply_linear(img.primed, inner, 2);
        });
}

TensorElement drinfeld_twist_alternative(const QhsaStructure& h, const TensorElement& gamma) {
    CoproductImages img(h);
    return three_leg_sum(
        phi_inverse(h), gamma,
        [&](const Word& w) {
            auto inner = basis_element(h, w[0]) * h.beta * h.antipode.image(w[1]);
            return apply_linear(img.primed, inner, 2);
        },
        [&](const Word& w) { return img.delta[w[2]]; });
}

TensorElement drinfeld_twist_inverse_alternative(const QhsaStructure& h, const TensorElement& gamma_bar) {
    CoproductImages img(h);
    return three_leg_sum(
        h.phi, gamma_bar,
        [&](const Word& w) {
            auto inner = h.antipode.image(w[0]) * h.alpha * basis_element(h, w[1]);
            return apply_linear(img.delta, inner, 2);
        },
        [&](const Word& w) { return img.anti[w[2]]; });
}

DrinfeldData compute_drinfeld_twist(const QhsaStructure& h) {
    check_shapes(h);
    auto gamma = compute_gamma(h);
    auto gamma_bar = compute_gamma_bar(h);
    auto f = drinfeld_twist_from(h, gamma);
    auto f_inv = drinfeld_twist_inverse_from(h, gamma_bar);
    auto one = unit_tensor(h, 2);
    if (!(f_inv * f == one) || !(f * f_inv == one)) {
        throw VerificationError("the constructed inverse of the Drinfeld twist is not its inverse");
    }
    return DrinfeldData{std::move(gamma), std::move(gamma_bar), std::move(f), std::move(f_inv),
                        counit_value(h, h.alpha), counit_value(h, h.beta)};
}

CheckReport verify_twist_elements(const QhsaStructure& h, const DrinfeldData& d) {
    check_shapes(h);
    CheckReport report;
    const auto dim = h.algebra->dimension();
    report.record_value("drinfeld.gamma", d.gamma);
    report.record_value("drinfeld.gamma_bar", d.gamma_bar);
    report.record_value("drinfeld.f_d", d.f_d);
    report.record_value("drinfeld.f_d_inverse", d.f_d_inverse);

    {
        EqualityCheck check(report, "drinfeld.gamma_expressions");
        check.compare(d.gamma, gamma_primary(h), {}, "primary expression");
        check.compare(d.gamma, gamma_alternative(h), {}, "alternative expression");
    }
    {
        EqualityCheck check(report, "drinfeld.gamma_bar_expressions");
        check.compare(d.gamma_bar, gamma_bar_primary(h), {}, "primary expression");
        check.compare(d.gamma_bar, gamma_bar_alternative(h), {}, "alternative expression");
    }
    {
        EqualityCheck check(report, "drinfeld.gamma_conjugation");
        for (std::uint32_t i = 0; i < dim && !check.failed(); ++i) {
            auto a = basis_element(h, i);
            check.compare(gamma_conjugate(h, d.gamma, a), counit_value(h, a) * d.gamma, {i});
        }
    }
    {
        EqualityCheck check(report, "drinfeld.gamma_bar_conjugation");
        for (std::uint32_t i = 0; i < dim && !check.failed(); ++i) {
            auto a = basis_element(h, i);
            check.compare(gamma_bar_conjugate(h, d.gamma_bar, a), counit_value(h, a) * d.gamma_bar, {i});
        }
    }
    {
        bool even = d.gamma.is_even() && d.gamma_bar.is_even() && d.f_d.is_even() && d.f_d_inverse.is_even();
        report.expect_true("drinfeld.elements_even", even, "gamma, gamma-bar, F_D or F_D^-1 is not even");
    }
    {
        auto one = unit_tensor(h, 2);
        EqualityCheck check(report, "drinfeld.inverse");
        check.compare(d.f_d_inverse * d.f_d, one, {}, "F_D^-1 F_D");
        check.compare(d.f_d * d.f_d_inverse, one, {}, "F_D F_D^-1");
    }
    {
        auto expected = scalar_unit(h, d.eps_alpha, 1);
        EqualityCheck check(report, "drinfeld.twist_counit");
        check.compare(apply_epsilon(h, d.f_d, 0), expected, {}, "(eps (x) 1) F_D");
        check.compare(apply_epsilon(h, d.f_d, 1), expected, {}, "(1 (x) eps) F_D");
    }
    report.expect_equal("drinfeld.alpha_gamma", d.f_d * h.delta.apply(h.alpha), d.gamma);
    report.expect_equal("drinfeld.beta_gamma_bar", h.delta.apply(h.beta) * d.f_d_inverse, d.gamma_bar);
    report.expect_equal("drinfeld.alternative_twist", drinfeld_twist_alternative(h, d.gamma), d.f_d);
    report.expect_equal("drinfeld.alternative_twist_inverse", drinfeld_twist_inverse_alternative(h, d.gamma_bar),
                        d.f_d_inverse);
    return report;
}

CheckReport verify_coproduct_conjugation(const QhsaStructure& h, const DrinfeldData& d) {
    check_shapes(h);
    CheckReport report;
    CoproductImages img(h);
    const auto dim = h.algebra->dimension();
    EqualityCheck conj(report, "drinfeld.coproduct_conjugation");
    EqualityCheck left(report, "drinfeld.coproduct_intertwining");
    EqualityCheck right(report, "drinfeld.inverse_intertwining");
    for (std::uint32_t i = 0; i < dim; ++i) {
        conj.compare(img.primed[i], d.f_d * img.delta[i] * d.f_d_inverse, {i});
        left.compare(img.primed[i] * d.f_d, d.f_d * img.delta[i], {i});
        right.compare(d.f_d_inverse * img.primed[i], img.delta[i] * d.f_d_inverse, {i});
    }
    conj.finish();
    left.finish();
    right.finish();
    return report;
}

CheckReport verify_primed_structure(const QhsaStructure& h, const DrinfeldData& d) {
    check_shapes(h);
    CheckReport report;
    auto primed = prime_structure(h);
    auto twisted = twist_components(h, d.f_d, d.f_d_inverse);
    const auto& f = d.f_d;

    report.expect_equal("drinfeld.primed_coassociator", primed.phi, twisted.phi);
    report.expect_equal("drinfeld.primed_coassociator_identity",
                        primed.phi * tensor_unit_left(f) * apply_delta(h, f, 1),
                        tensor_unit_right(f) * apply_delta(h, f, 0) * h.phi);
    if (auto primed_inv = try_invert(primed.phi)) {
        report.expect_equal("drinfeld.primed_coassociator_gamma",
                            *primed_inv * tensor_unit_right(f) * apply_delta(h, d.gamma, 0),
                            tensor_unit_left(f) * apply_delta(h, d.gamma, 1) * phi_inverse(h));
    } else {
        report.fail("drinfeld.primed_coassociator_gamma",
                    Witness{{}, primed.phi, "primed coassociator is not invertible"});
    }
    report.expect_equal("drinfeld.primed_alpha", twisted.alpha, d.eps_alpha * primed.alpha);
    report.expect_equal("drinfeld.primed_beta", twisted.beta, d.eps_beta * primed.beta);

    CheckReport axioms = check_quasi_bialgebra(primed);
    axioms.append(check_antipode_axioms(primed));
    summary_entry(report, "drinfeld.primed_axioms", axioms);
    return report;
}

CheckReport verify_primed_r_matrix(const QhsaStructure& h, const DrinfeldData& d) {
    check_shapes(h);
    require_r(h);
    const auto& r = *h.r_matrix;
    CheckReport report;
    auto primed = prime_structure(h);
    report.expect_equal("drinfeld.primed_r", *primed.r_matrix, flip(d.f_d) * r * d.f_d_inverse);
    report.expect_equal("drinfeld.primed_r_gamma", *primed.r_matrix * d.gamma, flip(d.gamma) * r);
    summary_entry(report, "drinfeld.primed_quasi_triangular", check_quasi_triangular(primed));
    return report;
}

CheckReport verify_primed_equivalence(const QhsaStructure& h, const DrinfeldData& d) {
    check_shapes(h);
    CheckReport report;
    auto primed = prime_structure(h);
    auto bar = d.normalized();
    auto twisted = twist_components(h, bar.element, bar.inverse);
    {
        EqualityCheck check(report, "drinfeld.equivalence.delta");
        for (std::uint32_t i = 0; i < h.algebra->dimension() && !check.failed(); ++i) {
            check.compare(twisted.delta.image(i), primed.delta.image(i), {i});
        }
    }
    report.expect_equal("drinfeld.equivalence.phi", twisted.phi, primed.phi);
    report.expect_equal("drinfeld.equivalence.alpha", twisted.alpha, d.eps_alpha * d.eps_alpha * primed.alpha);
    report.expect_equal("drinfeld.equivalence.beta", twisted.beta, d.eps_beta * d.eps_beta * primed.beta);
    if (h.r_matrix) report.expect_equal("drinfeld.equivalence.r", *twisted.r_matrix, *primed.r_matrix);
    return report;
}

CheckReport run_drinfeld_battery(const QhsaStructure& h, const DrinfeldData& d) {
    CheckReport report = verify_twist_elements(h, d);
    report.append(verify_coproduct_conjugation(h, d));
    report.append(verify_primed_structure(h, d));
    if (h.r_matrix) {
        report.append(verify_primed_r_matrix(h, d));
    } else {
        for (const char* id : {"drinfeld.primed_r", "drinfeld.primed_r_gamma", "drinfeld.primed_quasi_triangular"}) {
            report.skip(id, "no R-matrix");
        }
    }
    report.append(verify_primed_equivalence(h, d));
    return report;
}

} // namespace qhsa
