#include "doctest.h"
#include "qhsa/report.hpp"
#include "test_support.hpp"

using namespace qhsa;
using namespace qhsa::testing;

namespace {

AlgebraPtr make_algebra(std::vector<std::uint8_t> parity, std::vector<ProductEntry> products) {
    std::vector<Scalar> unit(parity.size(), Scalar());
    unit[0] = Scalar::integer(1);
    return std::make_shared<const GradedAlgebra>(FieldSpec::rational(), std::move(parity), std::move(unit), products);
}

ProductEntry p(std::uint32_t l, std::uint32_t r, std::uint32_t k, long c = 1) {
    return {l, r, k, Scalar::integer(c)};
}

} // namespace

TEST_CASE("bundled algebras satisfy the algebra axioms") {
    for (const auto& name : positive_fixtures()) {
        CAPTURE(name);
        CHECK(validate_algebra(load_fixture(name).algebra).passed());
    }
    CHECK(validate_algebra(make_algebra({0}, {p(0, 0, 0)})).passed());
}

TEST_CASE("grading failure names the offending pair") {
    // theta * theta = phi with phi odd: parities 1 + 1 do not give 1.
    auto alg = make_algebra({0, 1, 1}, {p(0, 0, 0), p(0, 1, 1), p(1, 0, 1), p(0, 2, 2), p(2, 0, 2), p(1, 1, 2)});
    auto report = validate_algebra(alg);
    const auto* e = report.find("algebra.grading");
    REQUIRE(e);
    CHECK(e->status == CheckStatus::fail);
    REQUIRE(e->witness);
    CHECK(e->witness->basis == Word{1, 1});
    CHECK(report.find("algebra.associativity")->status == CheckStatus::pass);
}

TEST_CASE("non-associative table is caught") {
    // a * a = b and b * a = a, so (a a) a = a but a (a a) = a b = 0.
    auto skew = make_algebra({0, 0, 0}, {p(0, 0, 0), p(0, 1, 1), p(1, 0, 1), p(0, 2, 2), p(2, 0, 2), p(1, 1, 2), p(2, 1, 1)});
    auto report = validate_algebra(skew);
    const auto* e = report.find("algebra.associativity");
    REQUIRE(e);
    CHECK(e->status == CheckStatus::fail);
    REQUIRE(e->witness);
    CHECK(e->witness->difference.has_value());

    auto commutative = make_algebra({0, 0}, {p(0, 0, 0), p(0, 1, 1), p(1, 0, 1), p(1, 1, 0), p(1, 1, 1)});
    CHECK(validate_algebra(commutative).passed());
}

TEST_CASE("unit failures") {
    auto no_unit = make_algebra({0, 0}, {p(0, 0, 0), p(1, 1, 1)});
    CHECK(validate_algebra(no_unit).find("algebra.unit")->status == CheckStatus::fail);

    auto odd_unit = std::make_shared<const GradedAlgebra>(
        FieldSpec::rational(), std::vector<std::uint8_t>{1}, std::vector<Scalar>{Scalar::integer(1)}, std::vector<ProductEntry>{p(0, 0, 0)});
    CHECK(validate_algebra(odd_unit).find("algebra.unit_even")->status == CheckStatus::fail);
}
