#include "qhsa/structure.hpp"

namespace qhsa {

void check_shapes(const QhsaStructure& h) {
    if (!h.algebra) throw DomainError("structure has no algebra");
    auto require = [&](const AlgebraPtr& a, const char* what) {
        if (!same_algebra(a, h.algebra)) {
            throw FieldMismatchError(std::string(what) + " is defined over a different algebra");
        }
    };
    auto arity = [](std::uint32_t got, std::uint32_t want, const char* what) {
        if (got != want) {
            throw DomainError(std::string(what) + " has arity " + std::to_string(got) + ", expected " +
                              std::to_string(want));
        }
    };
    require(h.delta.algebra(), "coproduct");
    require(h.epsilon.algebra(), "counit");
    require(h.antipode.algebra(), "antipode");
    require(h.phi.algebra(), "coassociator");
    require(h.alpha.algebra(), "alpha");
    require(h.beta.algebra(), "beta");
    arity(h.delta.out_arity(), 2, "coproduct");
    arity(h.epsilon.out_arity(), 0, "counit");
    arity(h.antipode.out_arity(), 1, "antipode");
    arity(h.phi.arity(), 3, "coassociator");
    arity(h.alpha.arity(), 1, "alpha");
    arity(h.beta.arity(), 1, "beta");
    if (h.r_matrix) {
        require(h.r_matrix->algebra(), "R-matrix");
        arity(h.r_matrix->arity(), 2, "R-matrix");
    }
}

TensorElement phi_inverse(const QhsaStructure& h) {
    auto inv = try_invert(h.phi);
    if (!inv) throw SingularError("coassociator is not invertible");
    return *inv;
}

StructureMap antipode_inverse(const QhsaStructure& h) {
    return invert_structure_map(h.antipode);
}

TensorElement apply_delta(const QhsaStructure& h, const TensorElement& x, std::uint32_t leg) {
    return apply_map_legs(x, leg, h.delta);
}

TensorElement apply_epsilon(const QhsaStructure& h, const TensorElement& x, std::uint32_t leg) {
    return apply_map_legs(x, leg, h.epsilon);
}

TensorElement apply_antipode(const QhsaStructure& h, const TensorElement& x, std::uint32_t leg) {
    return apply_map_legs(x, leg, h.antipode);
}

TensorElement opposite_coproduct(const QhsaStructure& h, const TensorElement& a) {
    return flip(h.delta.apply(a));
}

Scalar counit_value(const QhsaStructure& h, const TensorElement& a) {
    return h.epsilon.apply(a).scalar_value();
}

TensorElement unit_tensor(const QhsaStructure& h, std::uint32_t arity) {
    return TensorElement::unit(h.algebra, arity);
}

TensorElement basis_element(const QhsaStructure& h, std::uint32_t index) {
    return TensorElement::basis(h.algebra, {index});
}

namespace {

void parity_entry(CheckReport& report, const std::string& id, const StructureMap& f) {
    const auto& alg = *f.algebra();
    for (std::uint32_t i = 0; i < alg.dimension(); ++i) {
        const auto& img = f.image(i);
        auto p = img.parity();
        if (!p || (!img.is_zero() && *p != alg.parity(i))) {
            report.fail(id, Witness{{i}, img,
                                    "image of a basis vector of parity " + std::to_string(alg.parity(i)) +
                                        (p ? " has parity " + std::to_string(*p) : " is inhomogeneous")});
            return;
        }
    }
    report.pass(id);
}

void even_entry(CheckReport& report, const std::string& id, const TensorElement& x) {
    if (x.is_even()) {
        report.pass(id);
    } else {
        report.fail(id, Witness{{}, x, x.parity() ? "element is odd" : "element is inhomogeneous"});
    }
}

} // namespace

CheckReport validate_structure(const QhsaStructure& h) {
    check_shapes(h);
    CheckReport report;
    const auto d = h.algebra->dimension();
    const auto& alg = *h.algebra;

    parity_entry(report, "structure.delta_parity", h.delta);
    parity_entry(report, "structure.epsilon_parity", h.epsilon);
    parity_entry(report, "structure.antipode_parity", h.antipode);

    auto one = unit_tensor(h, 1);
    report.expect_equal("structure.delta_unit", h.delta.apply(one), unit_tensor(h, 2));
    report.expect_equal("structure.epsilon_unit", h.epsilon.apply(one), unit_tensor(h, 0));
    report.expect_equal("structure.antipode_unit", h.antipode.apply(one), one);

    std::vector<TensorElement> basis;
    std::vector<TensorElement> deltas, epsilons, antipodes;
    for (std::uint32_t i = 0; i < d; ++i) {
        basis.push_back(basis_element(h, i));
        deltas.push_back(h.delta.image(i));
        epsilons.push_back(h.epsilon.image(i));
        antipodes.push_back(h.antipode.image(i));
    }
    {
        EqualityCheck dm(report, "structure.delta_multiplicative");
        for (std::uint32_t i = 0; i < d && !dm.failed(); ++i) {
            for (std::uint32_t j = 0; j < d && !dm.failed(); ++j) {
                dm.compare(h.delta.apply(basis[i] * basis[j]), deltas[i] * deltas[j], {i, j});
            }
        }
    }
    {
        EqualityCheck em(report, "structure.epsilon_multiplicative");
        for (std::uint32_t i = 0; i < d && !em.failed(); ++i) {
            for (std::uint32_t j = 0; j < d && !em.failed(); ++j) {
                em.compare(h.epsilon.apply(basis[i] * basis[j]), epsilons[i] * epsilons[j], {i, j});
            }
        }
    }
    {
        EqualityCheck sa(report, "structure.antipode_antimultiplicative");
        for (std::uint32_t i = 0; i < d && !sa.failed(); ++i) {
            for (std::uint32_t j = 0; j < d && !sa.failed(); ++j) {
                auto rhs = antipodes[j] * antipodes[i];
                if (alg.parity(i) & alg.parity(j)) rhs = -rhs;
                sa.compare(h.antipode.apply(basis[i] * basis[j]), rhs, {i, j});
            }
        }
    }
    try {
        invert_structure_map(h.antipode);
        report.pass("structure.antipode_bijective");
    } catch (const SingularError& e) {
        report.fail("structure.antipode_bijective", Witness{{}, std::nullopt, e.what()});
    }

    even_entry(report, "structure.phi_even", h.phi);
    if (try_invert(h.phi)) {
        report.pass("structure.phi_invertible");
    } else {
        report.fail("structure.phi_invertible", Witness{{}, h.phi, "coassociator has no inverse"});
    }
    even_entry(report, "structure.alpha_even", h.alpha);
    even_entry(report, "structure.beta_even", h.beta);
    if (h.r_matrix) {
        even_entry(report, "structure.r_even", *h.r_matrix);
        if (try_invert(*h.r_matrix)) {
            report.pass("structure.r_invertible");
        } else {
            report.fail("structure.r_invertible", Witness{{}, *h.r_matrix, "R-matrix has no inverse"});
        }
    }
    return report;
}

} // namespace qhsa
