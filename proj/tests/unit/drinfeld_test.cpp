#include "doctest.h"
#include "qhsa/checks.hpp"
#include "qhsa/drinfeld.hpp"
#include "test_support.hpp"

using namespace qhsa;
using namespace qhsa::testing;

TEST_CASE("gamma of h2") {
    auto h2 = load_fixture("h2");
    auto expected = element(h2.algebra, 2, {{{0, 0}, "1"}, {{0, 1}, "-1"}, {{1, 0}, "-1"}, {{1, 1}, "-1"}});
    CHECK(gamma_of_function_algebra(h2) == expected);
    CHECK(gamma_primary(h2) == expected);
    CHECK(gamma_alternative(h2) == expected);
    CHECK(compute_gamma(h2) == expected);
}

TEST_CASE("gamma of scaled h2 follows alpha") {
    auto h = load_fixture("h2-scaled");
    CHECK(gamma_primary(h) == gamma_of_function_algebra(h));
    CHECK(gamma_primary(h) == Scalar::integer(4) * gamma_primary(load_fixture("h2")));
}

TEST_CASE("Drinfeld twist of h2") {
    auto h2 = load_fixture("h2");
    auto d = compute_drinfeld_twist(h2);
    auto f_d = element(h2.algebra, 2, {{{0, 0}, "1"}, {{0, 1}, "1"}, {{1, 0}, "1"}, {{1, 1}, "-1"}});
    CHECK(d.f_d == f_d);
    CHECK(d.f_d_inverse == f_d);
    CHECK(d.f_d * d.f_d == unit_tensor(h2, 2));
    CHECK(d.eps_alpha.is_one());
    CHECK(d.eps_beta.is_one());
}

TEST_CASE("Drinfeld twist of a Hopf superalgebra is trivial") {
    auto ext = load_fixture("ext");
    auto d = compute_drinfeld_twist(ext);
    CHECK(d.f_d == unit_tensor(ext, 2));
    CHECK(d.gamma == unit_tensor(ext, 2));
    CHECK(prime_structure(ext).delta == ext.delta);
}

TEST_CASE("full battery on every positive fixture") {
    for (const auto& name : positive_fixtures()) {
        CAPTURE(name);
        auto h = load_fixture(name);
        auto d = compute_drinfeld_twist(h);
        auto report = run_drinfeld_battery(h, d);
        CHECK(report.passed());
        const auto* primed_r = report.find("drinfeld.primed_r");
        REQUIRE(primed_r);
        CHECK(primed_r->status == (h.r_matrix ? CheckStatus::pass : CheckStatus::skipped));
    }
}

TEST_CASE("normalized Drinfeld twist is a strict twistor") {
    auto h = load_fixture("h2-scaled");
    auto d = compute_drinfeld_twist(h);
    CHECK(d.eps_alpha == Scalar::integer(2));
    CHECK(d.eps_beta == parse_scalar("1/2", FieldSpec::rational()));
    CHECK(apply_epsilon(h, d.f_d, 0) == Scalar::integer(2) * unit_tensor(h, 1));
    auto normalized = d.normalized();
    CHECK(check_twistor(h, normalized.element).passed());
    CHECK(normalized.element * normalized.inverse == unit_tensor(h, 2));
    auto report = verify_primed_equivalence(h, d);
    CHECK(report.passed());
}

TEST_CASE("broken structures are rejected before the Drinfeld construction") {
    auto results = run_suites(load_fixture("h2-broken-antipode"), {Suite::drinfeld});
    REQUIRE(results.size() == 1);
    CHECK(results[0].skipped.has_value());
}
