#include "qhsa/structure_map.hpp"

#include "qhsa/linear_solve.hpp"

namespace qhsa {

StructureMap::StructureMap(AlgebraPtr algebra, std::uint32_t out_arity, std::vector<TensorElement> images)
    : algebra_(std::move(algebra)), out_arity_(out_arity), images_(std::move(images)) {
    if (images_.size() != algebra_->dimension()) {
        throw DomainError("structure map needs one image per basis vector");
    }
    for (const auto& img : images_) {
        if (!same_algebra(img.algebra(), algebra_)) {
            throw FieldMismatchError("structure map image belongs to a different algebra");
        }
        if (img.arity() != out_arity_) {
            throw DomainError("structure map image has arity " + std::to_string(img.arity()) + ", expected " +
                              std::to_string(out_arity_));
        }
    }
}

StructureMap StructureMap::identity(const AlgebraPtr& algebra) {
    std::vector<TensorElement> images;
    for (std::uint32_t i = 0; i < algebra->dimension(); ++i) images.push_back(TensorElement::basis(algebra, {i}));
    return StructureMap(algebra, 1, std::move(images));
}

TensorElement StructureMap::apply(const TensorElement& x) const {
    if (x.arity() != 1) throw DomainError("StructureMap::apply expects an arity-1 element");
    return apply_map_legs(x, 0, *this);
}

bool StructureMap::preserves_parity() const {
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
        auto p = images_[i].parity();
        if (!p || (!images_[i].is_zero() && *p != algebra_->parity(i))) return false;
    }
    return true;
}

bool operator==(const StructureMap& a, const StructureMap& b) {
    return a.out_arity_ == b.out_arity_ && same_algebra(a.algebra_, b.algebra_) && a.images_ == b.images_;
}

TensorElement apply_map_legs(const TensorElement& x, std::uint32_t leg, const StructureMap& f) {
    if (leg >= x.arity()) throw DomainError("apply_map_legs: leg out of range");
    if (!same_algebra(x.algebra(), f.algebra())) {
        throw FieldMismatchError("apply_map_legs: map and element belong to different algebras");
    }
    const std::uint32_t n = x.arity();
    const std::uint32_t k = f.out_arity();
    TensorElement out(x.algebra(), n - 1 + k);
    Word w(n - 1 + k);
    for (const auto& [key, c] : x.terms()) {
        Word src = x.decode(key);
        const auto& img = f.image(src[leg]);
        if (img.is_zero()) continue;
        for (std::uint32_t i = 0; i < leg; ++i) w[i] = src[i];
        for (std::uint32_t i = leg + 1; i < n; ++i) w[i - 1 + k] = src[i];
        for (const auto& [ikey, ic] : img.terms()) {
            Word iw = img.decode(ikey);
            for (std::uint32_t j = 0; j < k; ++j) w[leg + j] = iw[j];
            out.add_term(w, c * ic);
        }
    }
    return out;
}

TensorElement apply_map_all_legs(const TensorElement& x, const StructureMap& f) {
    if (f.out_arity() != 1) throw DomainError("apply_map_all_legs expects an endomorphism");
    TensorElement out = x;
    for (std::uint32_t leg = 0; leg < x.arity(); ++leg) out = apply_map_legs(out, leg, f);
    return out;
}

StructureMap compose(const StructureMap& f, const StructureMap& g) {
    if (f.out_arity() != 1 || g.out_arity() != 1) throw DomainError("compose expects endomorphisms");
    std::vector<TensorElement> images;
    for (const auto& img : g.images()) images.push_back(f.apply(img));
    return StructureMap(f.algebra(), 1, std::move(images));
}

StructureMap invert_structure_map(const StructureMap& f) {
    if (f.out_arity() != 1) throw DomainError("only endomorphisms can be inverted");
    const auto& alg = f.algebra();
    const std::uint32_t d = alg->dimension();
    Matrix m(d, d, alg->field());
    for (std::uint32_t col = 0; col < d; ++col) {
        for (const auto& [row, c] : f.image(col).terms()) m.at(row, col) = c;
    }
    auto inv = invert_matrix(std::move(m));
    if (!inv) throw SingularError("structure map is not bijective");
    std::vector<TensorElement> images;
    for (std::uint32_t col = 0; col < d; ++col) {
        TensorElement img(alg, 1);
        for (std::uint32_t row = 0; row < d; ++row) img.add_key(row, inv->at(row, col));
        images.push_back(std::move(img));
    }
    return StructureMap(alg, 1, std::move(images));
}

} // namespace qhsa
