#include "qhsa/twist.hpp"

namespace qhsa {

TensorElement interleave(const AlgebraPtr& product, const TensorElement& x, const TensorElement& y) {
    const auto& a = *x.algebra();
    const auto& b = *y.algebra();
    if (x.arity() != y.arity()) throw DomainError("interleave expects equal arities");
    if (product->dimension() != a.dimension() * b.dimension()) {
        throw DomainError("interleave: product algebra has the wrong dimension");
    }
    const std::uint32_t n = x.arity();
    TensorElement out(product, n);
    Word w(n);
    for (const auto& [kx, cx] : x.terms()) {
        Word wx = x.decode(kx);
        for (const auto& [ky, cy] : y.terms()) {
            Word wy = y.decode(ky);
            std::uint8_t sign = 0;
            for (std::uint32_t j = 0; j < n; ++j) {
                if (!b.parity(wy[j])) continue;
                for (std::uint32_t i = j + 1; i < n; ++i) sign ^= a.parity(wx[i]);
            }
            for (std::uint32_t p = 0; p < n; ++p) w[p] = wx[p] * b.dimension() + wy[p];
            Scalar c = cx * cy;
            out.add_term(w, sign ? -c : c);
        }
    }
    return out;
}

QhsaStructure tensor_product_structure(const QhsaStructure& a, const QhsaStructure& b) {
    check_shapes(a);
    check_shapes(b);
    const auto& A = *a.algebra;
    const auto& B = *b.algebra;
    if (A.field() != B.field()) {
        throw FieldMismatchError("tensor product of structures over " + to_string(A.field()) + " and " +
                                 to_string(B.field()));
    }
    const bool a_trivial = a.phi == TensorElement::unit(a.algebra, 3);
    const bool b_trivial = b.phi == TensorElement::unit(b.algebra, 3);
    if (!a_trivial && !b_trivial) {
        throw DomainError("tensor product requires at least one factor with trivial coassociator");
    }
    const std::uint32_t da = A.dimension(), db = B.dimension();
    std::vector<std::uint8_t> parity;
    std::vector<Scalar> unit;
    for (std::uint32_t i = 0; i < da; ++i) {
        for (std::uint32_t j = 0; j < db; ++j) {
            parity.push_back(A.parity(i) ^ B.parity(j));
            unit.push_back(A.unit()[i] * B.unit()[j]);
        }
    }
    std::vector<ProductEntry> products;
    for (std::uint32_t i = 0; i < da; ++i) {
        for (std::uint32_t j = 0; j < db; ++j) {
            for (std::uint32_t k = 0; k < da; ++k) {
                for (std::uint32_t l = 0; l < db; ++l) {
                    const bool negate = B.parity(j) & A.parity(k);
                    for (const auto& ta : A.product(i, k)) {
                        for (const auto& tb : B.product(j, l)) {
                            Scalar c = ta.coeff * tb.coeff;
                            products.push_back({i * db + j, k * db + l, ta.index * db + tb.index, negate ? -c : c});
                        }
                    }
                }
            }
        }
    }
    auto alg = std::make_shared<const GradedAlgebra>(A.field(), std::move(parity), std::move(unit), products);

    std::vector<TensorElement> delta, epsilon, antipode;
    for (std::uint32_t i = 0; i < da; ++i) {
        for (std::uint32_t j = 0; j < db; ++j) {
            delta.push_back(interleave(alg, a.delta.image(i), b.delta.image(j)));
            epsilon.push_back(interleave(alg, a.epsilon.image(i), b.epsilon.image(j)));
            antipode.push_back(interleave(alg, a.antipode.image(i), b.antipode.image(j)));
        }
    }
    QhsaStructure out{a.name + b.name,
                      alg,
                      StructureMap(alg, 2, std::move(delta)),
                      StructureMap(alg, 0, std::move(epsilon)),
                      StructureMap(alg, 1, std::move(antipode)),
                      b_trivial ? interleave(alg, a.phi, TensorElement::unit(b.algebra, 3))
                                : interleave(alg, TensorElement::unit(a.algebra, 3), b.phi),
                      interleave(alg, a.alpha, b.alpha),
                      interleave(alg, a.beta, b.beta),
                      std::nullopt};
    if (a.r_matrix && b.r_matrix) out.r_matrix = interleave(alg, *a.r_matrix, *b.r_matrix);
    return out;
}

} // namespace qhsa
