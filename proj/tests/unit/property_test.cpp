#include "doctest.h"
#include "qhsa/checks.hpp"
#include "test_support.hpp"

#include <numeric>
#include <random>

using namespace qhsa;
using namespace qhsa::testing;

namespace {

Scalar random_scalar(std::mt19937& rng, const FieldSpec& field) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> coeffs(field.is_rational() ? 1 : field.degree());
    for (auto& c : coeffs) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
    }
    return Scalar::from_coefficients(std::move(coeffs), field);
}

// Basis of ker(eps) for structures whose counit is a coordinate functional.
std::vector<TensorElement> counit_kernel(const QhsaStructure& h) {
    std::vector<TensorElement> out;
    const auto d = h.algebra->dimension();
    std::optional<std::uint32_t> pivot;
    for (std::uint32_t i = 0; i < d; ++i) {
        if (!counit_value(h, basis_element(h, i)).is_zero() && !pivot) pivot = i;
    }
    for (std::uint32_t i = 0; i < d; ++i) {
        if (i == *pivot) continue;
        auto b = basis_element(h, i);
        auto e = counit_value(h, b);
        auto pb = basis_element(h, *pivot);
        out.push_back(b - (e * counit_value(h, pb).inverse()) * pb);
    }
    return out;
}

// 1 (x) 1 + N with N even in ker(eps) (x) ker(eps): counit-normalized by construction.
TensorElement random_twistor(const QhsaStructure& h, std::mt19937& rng) {
    auto ker = counit_kernel(h);
    auto f = unit_tensor(h, 2);
    std::bernoulli_distribution keep(0.5);
    for (const auto& a : ker) {
        for (const auto& b : ker) {
            if (a.parity() != b.parity() || !keep(rng)) continue;
            f += random_scalar(rng, h.algebra->field()) * outer(a, b);
        }
    }
    return f;
}

} // namespace

TEST_CASE("random twistors preserve every axiom") {
    std::mt19937 rng(20240611);
    int twisted_count = 0;
    for (std::string name : {"h2", "ext", "h2ext", "h2r", "h2ext-twisted"}) {
        auto h = load_fixture(name);
        for (int trial = 0; trial < 4; ++trial) {
            auto f = random_twistor(h, rng);
            CAPTURE(name);
            CAPTURE(to_string(f));
            auto report = check_twistor(h, f);
            if (failing_ids(report) == std::set<std::string>{"twistor.invertible"}) continue;
            REQUIRE(report.passed());
            auto twisted = twist_structure(h, make_twistor(h, f));
            ++twisted_count;
            CHECK(failing_ids(twisted, default_suites()).empty());
            auto g = random_twistor(h, rng);
            if (!check_twistor(h, g).passed()) continue;
            CHECK(twist_composition_check(h, make_twistor(h, f), make_twistor(h, g)).passed());
        }
    }
    CHECK(twisted_count >= 12);
}

TEST_CASE("field axioms hold on random cyclotomic scalars") {
    std::mt19937 rng(7);
    for (auto field : {FieldSpec::rational(), FieldSpec::cyclotomic(3), FieldSpec::cyclotomic(8)}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto a = random_scalar(rng, field), b = random_scalar(rng, field), c = random_scalar(rng, field);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Scalar(field));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::integer(1, field));
            CHECK(parse_scalar(to_string(a), field) == a);
        }
    }
}

TEST_CASE("graded tensor multiplication is associative") {
    std::mt19937 rng(11);
    auto h = load_fixture("h2ext");
    const auto d = h.algebra->dimension();
    std::uniform_int_distribution<std::uint32_t> idx(0, d - 1);
    auto random_element = [&] {
        TensorElement x(h.algebra, 3);
        for (int k = 0; k < 5; ++k) x.add_term({idx(rng), idx(rng), idx(rng)}, random_scalar(rng, h.algebra->field()));
        return x;
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_element(), b = random_element(), c = random_element();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("leg permutations compose and the flip is an involution") {
    std::mt19937 rng(3);
    auto h = load_fixture("h2ext");
    std::uniform_int_distribution<std::uint32_t> idx(0, h.algebra->dimension() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        TensorElement x(h.algebra, 4);
        for (int k = 0; k < 6; ++k) x.add_term({idx(rng), idx(rng), idx(rng), idx(rng)}, Scalar::integer(k + 1));
        std::vector<std::uint32_t> p(4), q(4);
        std::iota(p.begin(), p.end(), 0);
        std::iota(q.begin(), q.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        std::shuffle(q.begin(), q.end(), rng);
        std::vector<std::uint32_t> pq(4);
        for (std::uint32_t i = 0; i < 4; ++i) pq[i] = p[q[i]];
        CHECK(permute_legs(permute_legs(x, p), q) == permute_legs(x, pq));

        TensorElement y(h.algebra, 2);
        for (int k = 0; k < 4; ++k) y.add_term({idx(rng), idx(rng)}, Scalar::integer(k - 2));
        CHECK(flip(flip(y)) == y);
    }
}
