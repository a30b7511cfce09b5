#include "qhsa/twist.hpp"

#include <functional>

#include "qhsa/checks.hpp"

namespace qhsa {

namespace {

void require_twistor_shape(const QhsaStructure& h, const TensorElement& f) {
    if (!same_algebra(f.algebra(), h.algebra)) {
        throw FieldMismatchError("twistor is defined over a different algebra");
    }
    if (f.arity() != 2) {
        throw DomainError("twistor has arity " + std::to_string(f.arity()) + ", expected 2");
    }
}

std::string joined(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
    return out;
}

StructureMap map_images(const StructureMap& f, const std::function<TensorElement(const TensorElement&)>& g) {
    std::vector<TensorElement> images;
    images.reserve(f.images().size());
    for (const auto& img : f.images()) images.push_back(g(img));
    return StructureMap(f.algebra(), f.out_arity(), std::move(images));
}

} // namespace

CheckReport check_twistor(const QhsaStructure& h, const TensorElement& f) {
    require_twistor_shape(h, f);
    CheckReport report;
    if (f.is_even()) {
        report.pass("twistor.even");
    } else {
        report.fail("twistor.even", Witness{{}, f, f.parity() ? "twistor is odd" : "twistor is inhomogeneous"});
    }
    if (try_invert(f)) {
        report.pass("twistor.invertible");
    } else {
        report.fail("twistor.invertible", Witness{{}, f, "twistor has no two-sided inverse"});
    }
    auto one = unit_tensor(h, 1);
    report.expect_equal("twistor.counit_left", apply_epsilon(h, f, 0), one, {}, "(eps (x) 1) F");
    report.expect_equal("twistor.counit_right", apply_epsilon(h, f, 1), one, {}, "(1 (x) eps) F");
    return report;
}

CheckReport check_cocycle(const QhsaStructure& h, const Twistor& f) {
    require_twistor_shape(h, f.element);
    const auto& F = f.element;
    CheckReport report;
    report.expect_equal("twistor.cocycle", tensor_unit_right(F) * apply_delta(h, F, 0),
                        tensor_unit_left(F) * apply_delta(h, F, 1));
    return report;
}

Twistor make_twistor(const QhsaStructure& h, const TensorElement& f,
                     const std::optional<TensorElement>& declared_inverse) {
    auto report = check_twistor(h, f);
    if (!report.passed()) {
        throw InvalidTwistorError("invalid twistor: failed " + joined(report.failed_ids()), report);
    }
    if (declared_inverse) {
        require_twistor_shape(h, *declared_inverse);
        auto one = unit_tensor(h, 2);
        CheckReport inv_report;
        EqualityCheck check(inv_report, "twistor.declared_inverse");
        check.compare(f * *declared_inverse, one, {}, "F F^-1");
        check.compare(*declared_inverse * f, one, {}, "F^-1 F");
        check.finish();
        if (!inv_report.passed()) {
            throw InvalidTwistorError("declared twistor inverse is not the inverse of the twistor", inv_report);
        }
        return Twistor{f, *declared_inverse};
    }
    return Twistor{f, invert_tensor_element(f)};
}

QhsaStructure twist_components(const QhsaStructure& h, const TensorElement& f, const TensorElement& f_inverse) {
    check_shapes(h);
    require_twistor_shape(h, f);
    require_twistor_shape(h, f_inverse);
    QhsaStructure out = h;
    out.delta = map_images(h.delta, [&](const TensorElement& d) { return f * d * f_inverse; });
    out.phi = tensor_unit_right(f) * apply_delta(h, f, 0) * h.phi * apply_delta(h, f_inverse, 1) *
              tensor_unit_left(f_inverse);
    out.alpha = alpha_contraction(h, f_inverse);
    out.beta = beta_contraction(h, f);
    if (h.r_matrix) out.r_matrix = flip(f) * *h.r_matrix * f_inverse;
    return out;
}

QhsaStructure twist_structure(const QhsaStructure& h, const Twistor& f) {
    auto report = check_twistor(h, f.element);
    if (!report.passed()) {
        throw InvalidTwistorError("invalid twistor: failed " + joined(report.failed_ids()), report);
    }
    return twist_components(h, f.element, f.inverse);
}

CheckReport compare_structures(const QhsaStructure& a, const QhsaStructure& b, const std::string& prefix) {
    CheckReport report;
    if (!same_algebra(a.algebra, b.algebra)) {
        report.fail(prefix + ".algebra", Witness{{}, std::nullopt, "structures are over different algebras"});
        return report;
    }
    auto compare_map = [&](const std::string& id, const StructureMap& x, const StructureMap& y) {
        EqualityCheck check(report, prefix + "." + id);
        for (std::uint32_t i = 0; i < a.algebra->dimension() && !check.failed(); ++i) {
            check.compare(x.image(i), y.image(i), {i});
        }
    };
    compare_map("delta", a.delta, b.delta);
    compare_map("epsilon", a.epsilon, b.epsilon);
    compare_map("antipode", a.antipode, b.antipode);
    report.expect_equal(prefix + ".phi", a.phi, b.phi);
    report.expect_equal(prefix + ".alpha", a.alpha, b.alpha);
    report.expect_equal(prefix + ".beta", a.beta, b.beta);
    if (a.r_matrix && b.r_matrix) {
        report.expect_equal(prefix + ".r", *a.r_matrix, *b.r_matrix);
    } else if (a.r_matrix || b.r_matrix) {
        report.fail(prefix + ".r", Witness{{}, std::nullopt, "only one structure has an R-matrix"});
    }
    return report;
}

CheckReport twist_composition_check(const QhsaStructure& h, const Twistor& f, const Twistor& g) {
    auto hf = twist_components(h, f.element, f.inverse);
    auto hfg = twist_components(hf, g.element, g.inverse);
    auto h_gf = twist_components(h, g.element * f.element, f.inverse * g.inverse);
    return compare_structures(hfg, h_gf, "twist_composition");
}

QhsaStructure opposite_structure(const QhsaStructure& h) {
    check_shapes(h);
    auto s_inv = antipode_inverse(h);
    QhsaStructure out = h;
    out.delta = map_images(h.delta, [](const TensorElement& d) { return flip(d); });
    out.phi = permute_legs(phi_inverse(h), {2, 1, 0});
    out.antipode = s_inv;
    out.alpha = s_inv.apply(h.alpha);
    out.beta = s_inv.apply(h.beta);
    if (h.r_matrix) out.r_matrix = flip(*h.r_matrix);
    return out;
}

CheckReport verify_twist_by_r(const QhsaStructure& h) {
    check_shapes(h);
    if (!h.r_matrix) throw MissingRMatrixError("structure '" + h.name + "' has no R-matrix");
    const auto& r = *h.r_matrix;
    CheckReport report;
    auto r_inv = try_invert(r);
    auto phi_inv = try_invert(h.phi);
    if (!r_inv || !phi_inv) {
        std::string why = !r_inv ? "R-matrix is not invertible" : "coassociator is not invertible";
        for (const char* id : {"r_twist.delta", "r_twist.phi", "r_twist.r"}) report.skip(id, why);
        return report;
    }
    auto twisted = twist_components(h, r, *r_inv);
    {
        EqualityCheck check(report, "r_twist.delta");
        for (std::uint32_t i = 0; i < h.algebra->dimension() && !check.failed(); ++i) {
            check.compare(twisted.delta.image(i), flip(h.delta.image(i)), {i});
        }
    }
    report.expect_equal("r_twist.phi", twisted.phi, permute_legs(*phi_inv, {2, 1, 0}));
    report.expect_equal("r_twist.r", *twisted.r_matrix, flip(r));
    report.record_value("r_twist.alpha", twisted.alpha);
    report.record_value("r_twist.beta", twisted.beta);
    return report;
}

TensorElement primed_coproduct(const QhsaStructure& h, const StructureMap& s_inverse, const TensorElement& a) {
    auto d = flip(h.delta.apply(s_inverse.apply(a)));
    return apply_map_all_legs(d, h.antipode);
}

QhsaStructure prime_structure(const QhsaStructure& h) {
    check_shapes(h);
    auto s_inv = antipode_inverse(h);
    QhsaStructure out = h;
    std::vector<TensorElement> images;
    for (std::uint32_t i = 0; i < h.algebra->dimension(); ++i) {
        images.push_back(primed_coproduct(h, s_inv, basis_element(h, i)));
    }
    out.delta = StructureMap(h.algebra, 2, std::move(images));
    out.phi = apply_map_all_legs(permute_legs(h.phi, {2, 1, 0}), h.antipode);
    out.alpha = h.antipode.apply(h.beta);
    out.beta = h.antipode.apply(h.alpha);
    if (h.r_matrix) out.r_matrix = apply_map_all_legs(*h.r_matrix, h.antipode);
    return out;
}

CheckReport check_opposite_twist_compat(const QhsaStructure& h, const Twistor& f) {
    auto lhs = opposite_structure(twist_structure(h, f));
    auto rhs = twist_components(opposite_structure(h), flip(f.element), flip(f.inverse));
    return compare_structures(lhs, rhs, "opposite_twist");
}

CheckReport check_rescaling_covariance(const QhsaStructure& h, const Twistor& f, const Scalar& c) {
    if (c.is_zero()) throw DivisionByZeroError("rescaling factor must be nonzero");
    auto base = twist_components(h, f.element, f.inverse);
    auto scaled = twist_components(h, c * f.element, c.inverse() * f.inverse);
    CheckReport report;
    {
        EqualityCheck check(report, "rescaling.delta");
        for (std::uint32_t i = 0; i < h.algebra->dimension() && !check.failed(); ++i) {
            check.compare(scaled.delta.image(i), base.delta.image(i), {i});
        }
    }
    report.expect_equal("rescaling.phi", scaled.phi, base.phi);
    report.expect_equal("rescaling.alpha", scaled.alpha, c.inverse() * base.alpha);
    report.expect_equal("rescaling.beta", scaled.beta, c * base.beta);
    if (h.r_matrix) report.expect_equal("rescaling.r", *scaled.r_matrix, *base.r_matrix);
    return report;
}

} // namespace qhsa
