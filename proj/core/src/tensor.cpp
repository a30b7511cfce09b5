#include "qhsa/tensor.hpp"

#include <algorithm>
#include <limits>

#include "qhsa/linear_solve.hpp"

namespace qhsa {

TensorElement::TensorElement(AlgebraPtr algebra, std::uint32_t arity)
    : algebra_(std::move(algebra)), arity_(arity) {
    if (!algebra_) {
        throw DomainError("tensor element without algebra");
    }
    std::uint64_t d = algebra_->dimension();
    std::uint64_t bound = 1;
    for (std::uint32_t i = 0; i < arity_; ++i) {
        if (d != 0 && bound > std::numeric_limits<std::uint64_t>::max() / d) {
            throw DomainError("tensor arity " + std::to_string(arity_) + " too large for dimension " +
                              std::to_string(d));
        }
        bound *= d;
    }
}

TensorElement TensorElement::unit(const AlgebraPtr& algebra, std::uint32_t arity) {
    TensorElement out(algebra, arity);
    std::vector<std::uint32_t> support;
    for (std::uint32_t i = 0; i < algebra->dimension(); ++i) {
        if (!algebra->unit()[i].is_zero()) support.push_back(i);
    }
    if (arity == 0) {
        out.add_key(0, algebra->one());
        return out;
    }
    Word w(arity, 0);
    std::vector<std::size_t> idx(arity, 0);
    if (support.empty()) return out;
    while (true) {
        Scalar c = algebra->one();
        for (std::uint32_t l = 0; l < arity; ++l) {
            w[l] = support[idx[l]];
            c *= algebra->unit()[w[l]];
        }
        out.add_term(w, c);
        std::uint32_t l = arity;
        while (l > 0) {
            --l;
            if (++idx[l] < support.size()) break;
            idx[l] = 0;
            if (l == 0) return out;
        }
    }
}

TensorElement TensorElement::basis(const AlgebraPtr& algebra, const Word& word) {
    return basis(algebra, word, algebra->one());
}

TensorElement TensorElement::basis(const AlgebraPtr& algebra, const Word& word, const Scalar& coeff) {
    TensorElement out(algebra, static_cast<std::uint32_t>(word.size()));
    out.add_term(word, coeff);
    return out;
}

TensorElement TensorElement::scalar(const AlgebraPtr& algebra, const Scalar& value) {
    TensorElement out(algebra, 0);
    out.add_key(0, value);
    return out;
}

TensorElement TensorElement::from_coordinates(const AlgebraPtr& algebra, std::span<const Scalar> coords) {
    if (coords.size() != algebra->dimension()) {
        throw DomainError("coordinate vector has wrong length");
    }
    TensorElement out(algebra, 1);
    for (std::uint32_t i = 0; i < coords.size(); ++i) out.add_key(i, coords[i]);
    return out;
}

std::uint64_t TensorElement::encode(const Word& word) const {
    if (word.size() != arity_) {
        throw DomainError("word length " + std::to_string(word.size()) + " does not match arity " +
                          std::to_string(arity_));
    }
    std::uint64_t key = 0;
    std::uint64_t d = algebra_->dimension();
    for (auto w : word) {
        if (w >= d) {
            throw DomainError("basis index " + std::to_string(w) + " out of range");
        }
        key = key * d + w;
    }
    return key;
}

Word TensorElement::decode(std::uint64_t key) const {
    Word w(arity_);
    std::uint64_t d = algebra_->dimension();
    for (std::uint32_t i = arity_; i-- > 0;) {
        w[i] = static_cast<std::uint32_t>(key % d);
        key /= d;
    }
    return w;
}

void TensorElement::add_term(const Word& word, const Scalar& coeff) {
    add_key(encode(word), coeff);
}

void TensorElement::add_key(std::uint64_t key, const Scalar& coeff) {
    if (coeff.field() != algebra_->field()) {
        throw FieldMismatchError("coefficient field " + to_string(coeff.field()) + " does not match algebra field " +
                                 to_string(algebra_->field()));
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar TensorElement::coefficient(const Word& word) const {
    auto it = terms_.find(encode(word));
    return it == terms_.end() ? algebra_->zero() : it->second;
}

Scalar TensorElement::scalar_value() const {
    if (arity_ != 0) {
        throw DomainError("scalar_value on element of arity " + std::to_string(arity_));
    }
    return terms_.empty() ? algebra_->zero() : terms_.begin()->second;
}

std::uint8_t TensorElement::word_parity(const Word& word) const {
    std::uint8_t p = 0;
    for (auto w : word) p ^= algebra_->parity(w);
    return p;
}

std::optional<std::uint8_t> TensorElement::parity() const {
    std::optional<std::uint8_t> p;
    for (const auto& [key, c] : terms_) {
        auto q = word_parity(decode(key));
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return p.value_or(0);
}

bool TensorElement::is_even() const {
    auto p = parity();
    return p && *p == 0;
}

void TensorElement::require_compatible(const TensorElement& other, const char* op) const {
    if (!same_algebra(algebra_, other.algebra_)) {
        throw FieldMismatchError(std::string(op) + ": operands belong to different algebras");
    }
    if (arity_ != other.arity_) {
        throw DomainError(std::string(op) + ": arity " + std::to_string(arity_) + " vs " +
                          std::to_string(other.arity_));
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
    require_compatible(rhs, "add");
    for (const auto& [k, c] : rhs.terms_) add_key(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
    require_compatible(rhs, "subtract");
    for (const auto& [k, c] : rhs.terms_) add_key(k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
    if (c.field() != algebra_->field()) {
        throw FieldMismatchError("scalar field does not match algebra field");
    }
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b, "compare");
    return a.terms_ == b.terms_;
}

namespace {

struct DecodedTerm {
    Word word;
    const Scalar* coeff;
};

std::vector<DecodedTerm> decode_all(const TensorElement& x) {
    std::vector<DecodedTerm> out;
    out.reserve(x.size());
    for (const auto& [k, c] : x.terms()) out.push_back({x.decode(k), &c});
    return out;
}

} // namespace

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
    return a * b;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b, "multiply");
    const auto& alg = *a.algebra_;
    const std::uint32_t n = a.arity_;
    TensorElement out(a.algebra_, n);
    if (n == 0) {
        if (!a.is_zero() && !b.is_zero()) out.add_key(0, a.scalar_value() * b.scalar_value());
        return out;
    }
    auto da = decode_all(a);
    auto db = decode_all(b);
    const std::uint64_t d = alg.dimension();
    std::vector<std::span<const Term>> legs(n);
    std::vector<std::size_t> idx(n);
    for (const auto& ta : da) {
        // suffix[i] = parity of a_{i+1} ... a_{n-1}
        std::vector<std::uint8_t> suffix(n, 0);
        for (std::uint32_t i = n - 1; i-- > 0;) suffix[i] = suffix[i + 1] ^ alg.parity(ta.word[i + 1]);
        for (const auto& tb : db) {
            std::uint8_t sign = 0;
            bool empty = false;
            for (std::uint32_t i = 0; i < n; ++i) {
                sign ^= alg.parity(tb.word[i]) & suffix[i];
                legs[i] = alg.product(ta.word[i], tb.word[i]);
                if (legs[i].empty()) empty = true;
            }
            if (empty) continue;
            Scalar base = *ta.coeff * *tb.coeff;
            if (sign) base = -base;
            std::fill(idx.begin(), idx.end(), 0);
            while (true) {
                std::uint64_t key = 0;
                Scalar c = base;
                for (std::uint32_t i = 0; i < n; ++i) {
                    const Term& t = legs[i][idx[i]];
                    key = key * d + t.index;
                    if (!t.coeff.is_one()) c *= t.coeff;
                }
                out.add_key(key, c);
                std::uint32_t l = n;
                bool done = true;
                while (l > 0) {
                    --l;
                    if (++idx[l] < legs[l].size()) {
                        done = false;
                        break;
                    }
                    idx[l] = 0;
                }
                if (done) break;
            }
        }
    }
    return out;
}

TensorElement permute_legs(const TensorElement& x, std::span<const std::uint32_t> perm) {
    const std::uint32_t n = x.arity();
    if (perm.size() != n) {
        throw DomainError("permutation length does not match arity");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw DomainError("invalid leg permutation");
        seen[p] = true;
    }
    const auto& alg = *x.algebra();
    TensorElement out(x.algebra(), n);
    Word w(n);
    for (const auto& [key, c] : x.terms()) {
        Word src = x.decode(key);
        std::uint8_t sign = 0;
        for (std::uint32_t p = 0; p < n; ++p) {
            w[p] = src[perm[p]];
            if (!alg.parity(w[p])) continue;
            for (std::uint32_t q = p + 1; q < n; ++q) {
                if (perm[q] < perm[p]) sign ^= alg.parity(src[perm[q]]);
            }
        }
        out.add_term(w, sign ? -c : c);
    }
    return out;
}

TensorElement permute_legs(const TensorElement& x, std::initializer_list<std::uint32_t> perm) {
    return permute_legs(x, std::span<const std::uint32_t>(perm.begin(), perm.size()));
}

TensorElement flip(const TensorElement& x) {
    if (x.arity() != 2) throw DomainError("flip expects an arity-2 element");
    return permute_legs(x, {1, 0});
}

TensorElement embed_legs(const TensorElement& x, std::span<const std::uint32_t> positions, std::uint32_t arity) {
    const std::uint32_t n = x.arity();
    if (positions.size() != n || arity < n) {
        throw DomainError("embedding positions do not match arity");
    }
    std::vector<bool> used(arity, false);
    for (auto p : positions) {
        if (p >= arity || used[p]) throw DomainError("invalid embedding positions");
        used[p] = true;
    }
    const auto& alg = *x.algebra();
    // Unit coordinates on the free legs.
    std::vector<std::uint32_t> free_legs;
    for (std::uint32_t p = 0; p < arity; ++p) {
        if (!used[p]) free_legs.push_back(p);
    }
    TensorElement filler = TensorElement::unit(x.algebra(), static_cast<std::uint32_t>(free_legs.size()));
    auto fill_terms = decode_all(filler);

    TensorElement out(x.algebra(), arity);
    Word w(arity);
    for (const auto& [key, c] : x.terms()) {
        Word src = x.decode(key);
        std::uint8_t sign = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!alg.parity(src[i])) continue;
            for (std::uint32_t j = i + 1; j < n; ++j) {
                if (positions[j] < positions[i]) sign ^= alg.parity(src[j]);
            }
        }
        Scalar base = sign ? -c : c;
        for (std::uint32_t i = 0; i < n; ++i) w[positions[i]] = src[i];
        for (const auto& f : fill_terms) {
            for (std::size_t k = 0; k < free_legs.size(); ++k) w[free_legs[k]] = f.word[k];
            out.add_term(w, base * *f.coeff);
        }
    }
    return out;
}

TensorElement embed_legs(const TensorElement& x, std::initializer_list<std::uint32_t> positions,
                         std::uint32_t arity) {
    return embed_legs(x, std::span<const std::uint32_t>(positions.begin(), positions.size()), arity);
}

TensorElement tensor_unit_right(const TensorElement& x) {
    return outer(x, TensorElement::unit(x.algebra(), 1));
}

TensorElement tensor_unit_left(const TensorElement& x) {
    return outer(TensorElement::unit(x.algebra(), 1), x);
}

TensorElement contract_legs(const TensorElement& x, std::uint32_t leg) {
    const std::uint32_t n = x.arity();
    if (leg + 1 >= n) {
        throw DomainError("contract_legs: leg out of range");
    }
    const auto& alg = *x.algebra();
    TensorElement out(x.algebra(), n - 1);
    Word w(n - 1);
    for (const auto& [key, c] : x.terms()) {
        Word src = x.decode(key);
        for (std::uint32_t i = 0; i < leg; ++i) w[i] = src[i];
        for (std::uint32_t i = leg + 2; i < n; ++i) w[i - 1] = src[i];
        for (const auto& t : alg.product(src[leg], src[leg + 1])) {
            w[leg] = t.index;
            out.add_term(w, c * t.coeff);
        }
    }
    return out;
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
    if (!same_algebra(a.algebra(), b.algebra())) {
        throw FieldMismatchError("outer: operands belong to different algebras");
    }
    TensorElement out(a.algebra(), a.arity() + b.arity());
    const std::uint64_t d = a.algebra()->dimension();
    std::uint64_t shift = 1;
    for (std::uint32_t i = 0; i < b.arity(); ++i) shift *= d;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            out.add_key(ka * shift + kb, ca * cb);
        }
    }
    return out;
}

TensorElement multiply_leg_left(const TensorElement& a, const TensorElement& x, std::uint32_t leg) {
    if (a.arity() != 1) throw DomainError("multiply_leg_left expects an arity-1 factor");
    return embed_legs(a, {leg}, x.arity()) * x;
}

TensorElement multiply_leg_right(const TensorElement& x, const TensorElement& a, std::uint32_t leg) {
    if (a.arity() != 1) throw DomainError("multiply_leg_right expects an arity-1 factor");
    return x * embed_legs(a, {leg}, x.arity());
}

std::optional<TensorElement> try_invert(const TensorElement& x) {
    const auto& alg = x.algebra();
    const std::uint32_t n = x.arity();
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) size *= alg->dimension();
    if (size > 4096) {
        throw DomainError("tensor inversion limited to 4096 basis words");
    }
    // Column w of the matrix is x * e_w; solving gives a right inverse.
    Matrix m(size, size, alg->field());
    for (std::uint64_t col = 0; col < size; ++col) {
        TensorElement ew(alg, n);
        ew.add_key(col, alg->one());
        const TensorElement product = x * ew;
        for (const auto& [row, c] : product.terms()) m.at(row, col) = c;
    }
    TensorElement one = TensorElement::unit(alg, n);
    std::vector<Scalar> rhs(size, alg->zero());
    for (const auto& [k, c] : one.terms()) rhs[k] = c;
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    TensorElement inv(alg, n);
    for (std::uint64_t k = 0; k < size; ++k) inv.add_key(k, (*sol)[k]);
    if (!(inv * x == one)) return std::nullopt;
    return inv;
}

TensorElement invert_tensor_element(const TensorElement& x) {
    auto inv = try_invert(x);
    if (!inv) {
        throw SingularError("tensor element of arity " + std::to_string(x.arity()) + " is not invertible");
    }
    return *inv;
}

std::string to_string(const TensorElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        Word w = x.decode(key);
        for (std::size_t i = 0; i < w.size(); ++i) {
            out += i == 0 ? " e" : "(x)e";
            out += std::to_string(w[i]);
        }
    }
    return out;
}

} // namespace qhsa
