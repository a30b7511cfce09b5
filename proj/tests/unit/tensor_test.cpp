#include "doctest.h"
#include "qhsa/structure.hpp"
#include "test_support.hpp"

using namespace qhsa;
using namespace qhsa::testing;

TEST_CASE("graded product picks up Koszul signs") {
    auto ext = load_fixture("ext");
    const auto& a = ext.algebra;
    auto one_theta = TensorElement::basis(a, {0, 1});
    auto theta_one = TensorElement::basis(a, {1, 0});
    auto theta_theta = TensorElement::basis(a, {1, 1});

    CHECK(one_theta * theta_one == -theta_theta);
    CHECK(theta_one * one_theta == theta_theta);
    CHECK((theta_theta * theta_theta).is_zero());
    CHECK(TensorElement::unit(a, 2) * theta_theta == theta_theta);
    CHECK(theta_theta * TensorElement::unit(a, 2) == theta_theta);
}

TEST_CASE("tensor multiplication is associative") {
    for (const auto* name : {"ext", "h2ext-twisted"}) {
        auto h = load_fixture(name);
        const auto& phi = h.phi;
        auto inv = phi_inverse(h);
        auto other = embed_legs(h.delta.image(1), {0, 2}, 3);
        CHECK((phi * inv) * other == phi * (inv * other));
        CHECK((other * phi) * other == other * (phi * other));
    }
}

TEST_CASE("leg permutations") {
    auto h2 = load_fixture("h2");
    CHECK(permute_legs(h2.phi, {0, 1, 2}) == h2.phi);
    CHECK(permute_legs(h2.phi, {2, 1, 0}) == h2.phi);

    auto ext = load_fixture("ext");
    const auto& a = ext.algebra;
    auto x = TensorElement::basis(a, {1, 0, 1});
    CHECK(permute_legs(x, {0, 2, 1}) == TensorElement::basis(a, {1, 1, 0}));
    CHECK(permute_legs(x, {2, 1, 0}) == -x);
    CHECK(flip(TensorElement::basis(a, {1, 1})) == -TensorElement::basis(a, {1, 1}));
    CHECK(flip(flip(ext.r_matrix.value())) == ext.r_matrix.value());

    // Output leg p carries input leg perm[p]: composing {1,2,0} with itself gives {2,0,1}.
    auto y = TensorElement::basis(a, {1, 0, 1}) + TensorElement::basis(a, {0, 1, 1});
    CHECK(permute_legs(permute_legs(y, {1, 2, 0}), {1, 2, 0}) == permute_legs(y, {2, 0, 1}));
    CHECK(permute_legs(permute_legs(y, {1, 2, 0}), {2, 0, 1}) == y);
}

TEST_CASE("embedding legs") {
    auto ext = load_fixture("ext");
    const auto& a = ext.algebra;
    auto r13 = embed_legs(*ext.r_matrix, {0, 2}, 3);
    auto expected = TensorElement::basis(a, {0, 0, 0}) + TensorElement::basis(a, {1, 0, 1});
    CHECK(r13 == expected);

    auto c = TensorElement::scalar(a, Scalar::integer(5));
    CHECK(embed_legs(c, std::initializer_list<std::uint32_t>{}, 2) == Scalar::integer(5) * TensorElement::unit(a, 2));
    CHECK(tensor_unit_right(TensorElement::basis(a, {1})) == TensorElement::basis(a, {1, 0}));
    CHECK(tensor_unit_left(TensorElement::basis(a, {1})) == TensorElement::basis(a, {0, 1}));
}

TEST_CASE("structure maps on legs") {
    auto ext = load_fixture("ext");
    const auto& a = ext.algebra;
    auto theta_one = TensorElement::basis(a, {1, 0});
    CHECK(apply_delta(ext, theta_one, 0) == TensorElement::basis(a, {1, 0, 0}) + TensorElement::basis(a, {0, 1, 0}));
    CHECK(invert_structure_map(ext.antipode) == ext.antipode);
    auto id = StructureMap::identity(a);
    CHECK(invert_structure_map(id) == id);
    CHECK_THROWS_AS(invert_structure_map(ext.epsilon), DomainError);
    CHECK(apply_map_all_legs(TensorElement::basis(a, {1, 1}), ext.antipode) == TensorElement::basis(a, {1, 1}));
}

TEST_CASE("inversion") {
    auto h2 = load_fixture("h2");
    CHECK(invert_tensor_element(h2.phi) == h2.phi);
    CHECK(invert_tensor_element(TensorElement::unit(h2.algebra, 3)) == TensorElement::unit(h2.algebra, 3));

    auto ext = load_fixture("ext");
    auto r_inv = invert_tensor_element(*ext.r_matrix);
    CHECK(r_inv * *ext.r_matrix == TensorElement::unit(ext.algebra, 2));
    CHECK(!try_invert(TensorElement::basis(ext.algebra, {1, 1})));
    CHECK_THROWS_AS(invert_tensor_element(TensorElement::basis(ext.algebra, {1, 1})), SingularError);
}

TEST_CASE("contraction multiplies neighbouring legs") {
    auto h2 = load_fixture("h2");
    const auto& a = h2.algebra;
    CHECK(contract_legs(TensorElement::basis(a, {1, 1, 0}), 0) == TensorElement::basis(a, {1, 0}));
    CHECK(contract_legs(TensorElement::basis(a, {1, 0, 0}), 0).is_zero());
    CHECK(contract_legs(TensorElement::basis(a, {1, 0, 0}), 1) == TensorElement::basis(a, {1, 0}));
}

TEST_CASE("text form") {
    auto h2 = load_fixture("h2");
    CHECK(to_string(TensorElement(h2.algebra, 2)) == "0");
    CHECK(to_string(TensorElement::basis(h2.algebra, {0, 1})) == "1 e0(x)e1");
}
