#pragma once

#include <vector>

#include "qhsa/tensor.hpp"

namespace qhsa {

/// Linear map from the algebra into its out_arity-fold tensor power, given by
/// the images of the basis vectors. Coproduct (arity 2), counit (arity 0) and
/// antipode (arity 1) are all of this form.
///
/// Every structure map is expected to be even, so applying it to one leg of a
/// tensor never introduces a sign.
class StructureMap {
public:
    StructureMap(AlgebraPtr algebra, std::uint32_t out_arity, std::vector<TensorElement> images);

    static StructureMap identity(const AlgebraPtr& algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::uint32_t out_arity() const { return out_arity_; }
    const TensorElement& image(std::uint32_t index) const { return images_.at(index); }
    const std::vector<TensorElement>& images() const { return images_; }

    /// Image of an arity-1 element.
    TensorElement apply(const TensorElement& x) const;
    /// True when every basis image has the parity of its basis vector.
    bool preserves_parity() const;

    friend bool operator==(const StructureMap& a, const StructureMap& b);

private:
    AlgebraPtr algebra_;
    std::uint32_t out_arity_;
    std::vector<TensorElement> images_;
};

/// Applies f to leg `leg` of x; the result has arity x.arity() - 1 + f.out_arity().
TensorElement apply_map_legs(const TensorElement& x, std::uint32_t leg, const StructureMap& f);
/// Applies f to every leg.
TensorElement apply_map_all_legs(const TensorElement& x, const StructureMap& f);

/// f after g, for endomorphisms.
StructureMap compose(const StructureMap& f, const StructureMap& g);

/// Inverse of an endomorphism. Throws DomainError for other arities and
/// SingularError when the map is not bijective.
StructureMap invert_structure_map(const StructureMap& f);

} // namespace qhsa
