#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhsa/algebra.hpp"

namespace qhsa {

/// A basis word e_{w0} (x) e_{w1} (x) ... of an n-fold tensor power.
using Word = std::vector<std::uint32_t>;

/// Element of the n-fold graded tensor power of an algebra, stored sparsely
/// over basis words. Arity 0 is the ground field.
///
/// Words are packed into 64-bit keys in base dim with leg 0 most significant,
/// so iteration order is lexicographic in the word.
class TensorElement {
public:
    TensorElement(AlgebraPtr algebra, std::uint32_t arity);

    /// 1 (x) ... (x) 1.
    static TensorElement unit(const AlgebraPtr& algebra, std::uint32_t arity);
    static TensorElement basis(const AlgebraPtr& algebra, const Word& word);
    static TensorElement basis(const AlgebraPtr& algebra, const Word& word, const Scalar& coeff);
    /// Arity-0 element.
    static TensorElement scalar(const AlgebraPtr& algebra, const Scalar& value);
    /// Arity-1 element from dense coordinates.
    static TensorElement from_coordinates(const AlgebraPtr& algebra, std::span<const Scalar> coords);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::uint32_t arity() const { return arity_; }
    const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::uint64_t encode(const Word& word) const;
    Word decode(std::uint64_t key) const;

    /// Adds coeff * word, dropping the term if it cancels.
    void add_term(const Word& word, const Scalar& coeff);
    void add_key(std::uint64_t key, const Scalar& coeff);
    Scalar coefficient(const Word& word) const;
    /// Coefficient of an arity-0 element.
    Scalar scalar_value() const;

    /// Parity of a homogeneous element; 0 for zero, nullopt when inhomogeneous.
    std::optional<std::uint8_t> parity() const;
    bool is_even() const;
    std::uint8_t word_parity(const Word& word) const;

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    TensorElement& operator*=(const Scalar& c);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
    friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
    /// Graded product in the tensor power algebra.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    friend bool operator==(const TensorElement& a, const TensorElement& b);

private:
    void require_compatible(const TensorElement& other, const char* op) const;

    AlgebraPtr algebra_;
    std::uint32_t arity_;
    std::map<std::uint64_t, Scalar> terms_;
};

/// Product in the graded tensor power: for words a and b the sign is
/// (-1)^(sum over i<j of |b_i||a_j|).
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

/// Leg permutation with Koszul sign. Output leg p receives input leg perm[p];
/// each pair of odd legs whose relative order is reversed contributes -1.
TensorElement permute_legs(const TensorElement& x, std::span<const std::uint32_t> perm);
TensorElement permute_legs(const TensorElement& x, std::initializer_list<std::uint32_t> perm);

/// Graded flip a (x) b -> (-1)^(|a||b|) b (x) a of an arity-2 element.
TensorElement flip(const TensorElement& x);

/// Places input leg i at output position positions[i] and the unit in every
/// other position. Positions must be distinct; reordering carries the Koszul sign.
TensorElement embed_legs(const TensorElement& x, std::span<const std::uint32_t> positions,
                         std::uint32_t arity);
TensorElement embed_legs(const TensorElement& x, std::initializer_list<std::uint32_t> positions,
                         std::uint32_t arity);

/// x (x) 1 and 1 (x) x.
TensorElement tensor_unit_right(const TensorElement& x);
TensorElement tensor_unit_left(const TensorElement& x);

/// Multiplies leg `leg` into leg `leg + 1`, reducing the arity by one.
TensorElement contract_legs(const TensorElement& x, std::uint32_t leg);

/// Concatenation a (x) b, no sign.
TensorElement outer(const TensorElement& a, const TensorElement& b);

/// Multiplies every word of x by ones (x) ... (x) a (x) ... at leg `leg`,
/// a being an arity-1 element, on the left or right.
TensorElement multiply_leg_left(const TensorElement& a, const TensorElement& x, std::uint32_t leg);
TensorElement multiply_leg_right(const TensorElement& x, const TensorElement& a, std::uint32_t leg);

/// Two-sided inverse. Throws SingularError when none exists.
TensorElement invert_tensor_element(const TensorElement& x);
/// Two-sided inverse if one exists.
std::optional<TensorElement> try_invert(const TensorElement& x);

/// Human-readable form, e.g. "1 e0(x)e1 + -2 e1(x)e1".
std::string to_string(const TensorElement& x);

} // namespace qhsa
