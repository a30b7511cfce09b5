#include "doctest.h"
#include "qhsa/checks.hpp"
#include "test_support.hpp"

using namespace qhsa;
using namespace qhsa::testing;

TEST_CASE("twisted structures pass every suite") {
    for (const auto& name : positive_fixtures()) {
        auto h = load_fixture(name);
        for (const auto& f_name : twistors_for(h)) {
            CAPTURE(name);
            CAPTURE(f_name);
            auto twisted = twist_structure(h, twistor_for(h, f_name));
            CHECK(failing_ids(twisted, default_suites()).empty());
        }
    }
}

TEST_CASE("twisting by the unit is the identity") {
    auto h = load_fixture("h2r");
    auto twisted = twist_structure(h, make_twistor(h, unit_tensor(h, 2)));
    CHECK(compare_structures(h, twisted, "identity").passed());
}

TEST_CASE("twistor validation") {
    auto ext = load_fixture("ext");
    auto theta_theta = TensorElement::basis(ext.algebra, {1, 1});
    auto report = check_twistor(ext, theta_theta);
    CHECK(failing_ids(report) ==
          std::set<std::string>{"twistor.invertible", "twistor.counit_left", "twistor.counit_right"});
    CHECK_THROWS_AS(make_twistor(ext, theta_theta), InvalidTwistorError);

    auto odd = unit_tensor(ext, 2) + TensorElement::basis(ext.algebra, {1, 0});
    CHECK(failing_ids(check_twistor(ext, odd)).count("twistor.even") == 1);

    auto h2 = load_fixture("h2");
    auto f = twistor_for(h2, "h2-f-e11");
    auto wrong = f.inverse + f.inverse;
    CHECK_THROWS_AS(make_twistor(h2, f.element, wrong), InvalidTwistorError);
    try {
        make_twistor(h2, f.element, wrong);
    } catch (const InvalidTwistorError& e) {
        CHECK(failing_ids(e.report()).count("twistor.declared_inverse") == 1);
    }
}

TEST_CASE("cocycle condition") {
    // Every normalized diagonal element of H2 (x) H2 is a 2-cocycle of the group Z2.
    auto h2 = load_fixture("h2");
    CHECK(check_cocycle(h2, twistor_for(h2, "h2-f-e11")).passed());
    CHECK(check_cocycle(h2, twistor_for(h2, "h2-g")).passed());

    auto ext = load_fixture("ext");
    CHECK(check_cocycle(ext, twistor_for(ext, "ext-theta")).passed());

    auto h2ext = load_fixture("h2ext");
    auto report = check_cocycle(h2ext, twistor_for(h2ext, "h2ext-noncocycle"));
    CHECK(failing_ids(report) == std::set<std::string>{"twistor.cocycle"});
}

TEST_CASE("a cocycle twist of a Hopf superalgebra keeps a trivial coassociator") {
    auto ext = load_fixture("ext");
    auto twisted = twist_structure(ext, twistor_for(ext, "ext-theta"));
    CHECK(twisted.phi == unit_tensor(ext, 3));
}

TEST_CASE("twist composition") {
    auto h2 = load_fixture("h2");
    auto f = twistor_for(h2, "h2-f-e11");
    auto g = twistor_for(h2, "h2-g");
    CHECK(twist_composition_check(h2, f, g).passed());
    CHECK(twist_composition_check(h2, g, f).passed());

    auto h = load_fixture("h2ext-twisted");
    auto n = twistor_for(h, "h2ext-noncocycle");
    CHECK(twist_composition_check(h, n, n).passed());
}

TEST_CASE("opposite structures") {
    auto h2 = load_fixture("h2");
    CHECK(compare_structures(h2, opposite_structure(h2), "opposite").passed());
    for (const auto& name : positive_fixtures()) {
        CAPTURE(name);
        auto h = load_fixture(name);
        auto op = opposite_structure(h);
        CHECK(failing_ids(op, default_suites()).empty());
        CHECK(compare_structures(h, opposite_structure(op), "double").passed());
    }
    auto ext = load_fixture("ext");
    auto op = opposite_structure(ext);
    CHECK(*op.r_matrix == flip(*ext.r_matrix));
    CHECK(op.antipode == ext.antipode);
}

TEST_CASE("opposite of a twist is the twist of the opposite") {
    for (std::string name : {"ext", "h2", "h2r", "h2ext-twisted"}) {
        auto h = load_fixture(name);
        for (const auto& f_name : twistors_for(h)) {
            CAPTURE(name);
            CAPTURE(f_name);
            auto report = check_opposite_twist_compat(h, twistor_for(h, f_name));
            CHECK(report.passed());
            if (h.r_matrix) CHECK(report.find("opposite_twist.r") != nullptr);
        }
    }
}

TEST_CASE("twisting by R gives the opposite structure") {
    for (std::string name : {"ext", "h2r", "trivial"}) {
        CAPTURE(name);
        auto report = verify_twist_by_r(load_fixture(name));
        CHECK(report.passed());
        CHECK(report.find_value("r_twist.alpha") != nullptr);
    }
    CHECK_THROWS_AS(verify_twist_by_r(load_fixture("h2")), MissingRMatrixError);
}

TEST_CASE("rescaling a twistor rescales alpha and beta") {
    auto h2 = load_fixture("h2");
    auto report = check_rescaling_covariance(h2, twistor_for(h2, "h2-f-e11"), Scalar::integer(3));
    CHECK(report.passed());
    CHECK(report.find("rescaling.alpha") != nullptr);
}

TEST_CASE("primed structures") {
    auto ext = load_fixture("ext");
    CHECK(compare_structures(ext, prime_structure(ext), "prime").passed());
    for (const auto& name : positive_fixtures()) {
        CAPTURE(name);
        CHECK(failing_ids(prime_structure(load_fixture(name)), default_suites()).empty());
    }
}

TEST_CASE("graded tensor product") {
    auto h2 = load_fixture("h2");
    auto ext = load_fixture("ext");
    auto product = tensor_product_structure(h2, ext);
    auto fixture = load_fixture("h2ext");
    product.name = fixture.name;
    CHECK(compare_structures(product, fixture, "tensor").passed());
    CHECK(!product.r_matrix);

    auto both = tensor_product_structure(ext, ext);
    CHECK(both.r_matrix.has_value());
    CHECK(failing_ids(both, default_suites()).empty());

    CHECK_THROWS_AS(tensor_product_structure(h2, load_fixture("h2r")), FieldMismatchError);
    CHECK_THROWS_AS(tensor_product_structure(h2, h2), DomainError);
}
