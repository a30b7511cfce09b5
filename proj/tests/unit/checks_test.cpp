#include "doctest.h"
#include "qhsa/checks.hpp"
#include "test_support.hpp"

using namespace qhsa;
using namespace qhsa::testing;

namespace {

CheckStatus status_of(const CheckReport& report, const std::string& id) {
    const auto* e = report.find(id);
    REQUIRE_MESSAGE(e, id);
    return e->status;
}

} // namespace

TEST_CASE("quasi-bialgebra and antipode axioms on every positive fixture") {
    for (const auto& name : positive_fixtures()) {
        CAPTURE(name);
        auto h = load_fixture(name);
        CHECK(check_quasi_bialgebra(h).passed());
        CHECK(check_antipode_axioms(h).passed());
        CHECK(check_pentagon_consequences(h).passed());
        CHECK(check_leg_exchange(h).passed());
        CHECK(check_eta_absorption(h).passed());
    }
}

TEST_CASE("counit consequences follow from the axioms") {
    for (const auto& name : positive_fixtures()) {
        CAPTURE(name);
        auto h = load_fixture(name);
        if (!check_quasi_bialgebra(h).passed() || !check_antipode_axioms(h).passed()) continue;
        auto report = check_antipode_axioms(h);
        CHECK(status_of(report, "antipode.counit_alpha_beta") == CheckStatus::pass);
        CHECK(status_of(report, "antipode.counit_invariance") == CheckStatus::pass);
    }
}

TEST_CASE("corrupted coassociator breaks the pentagon") {
    auto h2 = load_fixture("h2");
    h2.phi = element(h2.algebra, 3, {{{0, 0, 0}, "1"}, {{0, 0, 1}, "1"}, {{0, 1, 0}, "1"}, {{0, 1, 1}, "1"},
                                     {{1, 0, 0}, "1"}, {{1, 0, 1}, "1"}, {{1, 1, 0}, "-1"}, {{1, 1, 1}, "1"}});
    auto report = check_quasi_bialgebra(h2);
    CHECK(status_of(report, "qba.pentagon") == CheckStatus::fail);
    REQUIRE(report.find("qba.pentagon")->witness);
    CHECK(!report.find("qba.pentagon")->witness->difference->is_zero());
    CHECK(status_of(report, "qba.coassociativity") == CheckStatus::pass);
}

TEST_CASE("bundled broken pentagon fails only the pentagon") {
    auto h = load_fixture("h2ext-broken-pentagon");
    auto report = check_quasi_bialgebra(h);
    CHECK(failing_ids(report) == std::set<std::string>{"qba.pentagon"});
    CHECK(check_antipode_axioms(h).passed());
}

TEST_CASE("alpha replaced by one breaks the antipode identities") {
    auto h2 = load_fixture("h2");
    h2.alpha = unit_tensor(h2, 1);
    auto report = check_antipode_axioms(h2);
    CHECK(failing_ids(report) == std::set<std::string>{"antipode.phi_identity", "antipode.phi_inverse_identity"});
    // The contraction gives e0 - e1 instead of 1.
    const auto& w = report.find("antipode.phi_inverse_identity")->witness;
    REQUIRE(w);
    CHECK(*w->difference == element(h2.algebra, 1, {{{1}, "-2"}}));
    CHECK(failing_ids(load_fixture("h2-broken-antipode"), {Suite::antipode}) == failing_ids(report));
}

TEST_CASE("quasi-triangular structures") {
    for (const auto* name : {"ext", "h2r", "trivial"}) {
        CAPTURE(name);
        auto h = load_fixture(name);
        CHECK(check_quasi_triangular(h).passed());
        CHECK(check_qqybe(h).passed());
    }
    CHECK(check_triangular(load_fixture("ext")).passed());
    CHECK(check_triangular(load_fixture("trivial")).passed());
    CHECK(status_of(check_triangular(load_fixture("h2r")), "triangular.inverse_is_flip") == CheckStatus::fail);
    CHECK_THROWS_AS(check_quasi_triangular(load_fixture("h2")), MissingRMatrixError);
}

TEST_CASE("h2 with the trivial R-matrix fails the first hexagon") {
    auto h2 = load_fixture("h2");
    h2.r_matrix = unit_tensor(h2, 2);
    auto report = check_quasi_triangular(h2);
    CHECK(status_of(report, "qt.intertwining") == CheckStatus::pass);
    CHECK(status_of(report, "qt.coproduct_first_leg") == CheckStatus::fail);
    // The right side has coefficient -1 at e1 (x) e1 (x) e1, the left side 1.
    CHECK(report.find("qt.coproduct_first_leg")->witness->difference->coefficient({1, 1, 1}) == Scalar::integer(2));
}

TEST_CASE("leg exchange matches the term-by-term expansion") {
    for (const auto* name : {"h2", "h2ext", "h2ext-twisted"}) {
        auto h = load_fixture(name);
        auto phi_inv = phi_inverse(h);
        for (int which = 1; which <= 4; ++which) {
            for (std::uint32_t a = 0; a < h.algebra->dimension(); ++a) {
                CAPTURE(name);
                CAPTURE(which);
                CAPTURE(a);
                auto [lhs, rhs] = leg_exchange_sides(h, phi_inv, which, basis_element(h, a));
                auto [hand_lhs, hand_rhs] = leg_exchange_by_hand(h, which, a);
                CHECK(lhs == hand_lhs);
                CHECK(rhs == hand_rhs);
                CHECK(hand_lhs == hand_rhs);
            }
        }
    }
}

TEST_CASE("leg exchange at the unit reduces to the coassociator") {
    auto h = load_fixture("h2ext-twisted");
    auto [lhs, rhs] = leg_exchange_sides(h, phi_inverse(h), 1, unit_tensor(h, 1));
    auto expected = contract_legs(multiply_leg_left(h.beta, apply_antipode(h, h.phi, 2), 2), 1);
    CHECK(lhs == expected);
    CHECK(rhs == expected);
}

TEST_CASE("pentagon consequences on h2") {
    auto report = check_pentagon_consequences(load_fixture("h2"));
    for (const auto* id : {"pentagon.phi_tensor_one", "pentagon.one_tensor_phi", "pentagon.phi_inverse_tensor_one",
                           "pentagon.one_tensor_phi_inverse"}) {
        CHECK(status_of(report, id) == CheckStatus::pass);
    }
}

TEST_CASE("hand-expanded coassociator identity") {
    for (const auto* name : {"h2", "h2ext", "h2ext-twisted"}) {
        CAPTURE(name);
        auto h = load_fixture(name);
        CHECK(phi_tensor_one_by_hand(h) == embed_legs(h.phi, {0, 1, 2}, 4));
    }
}

TEST_CASE("singular coassociator skips dependent checks") {
    auto h2 = load_fixture("h2");
    h2.phi = TensorElement::basis(h2.algebra, {1, 1, 1});
    auto report = check_antipode_axioms(h2);
    CHECK(status_of(report, "antipode.phi_inverse_identity") == CheckStatus::skipped);
}
