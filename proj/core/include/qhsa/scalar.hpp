#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qhsa/error.hpp"

namespace qhsa {

using Rational = mpq_class;

namespace detail {
struct CyclotomicField;
}

/// The ground field of a document: either Q or the cyclotomic field Q(zeta_n).
///
/// Every scalar inside one structure lives in the same field; there is no
/// automatic promotion between fields.
class FieldSpec {
public:
    /// Q.
    FieldSpec() = default;

    static FieldSpec rational() { return FieldSpec{}; }
    /// Q(zeta_n) for n >= 1.
    static FieldSpec cyclotomic(std::uint32_t order);

    bool is_rational() const { return order_ == 0; }
    /// 0 for Q, n for Q(zeta_n).
    std::uint32_t order() const { return order_; }
    /// Dimension over Q: 1 for Q, phi(n) for Q(zeta_n).
    std::size_t degree() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t order) : order_(order) {}
    std::uint32_t order_ = 0;
};

/// "rational" or "cyclotomic:<n>".
std::string to_string(const FieldSpec& field);
FieldSpec parse_field_spec(std::string_view text);

/// Exact element of Q or Q(zeta_n).
///
/// Cyclotomic values are stored as a coefficient vector of length phi(n) in the
/// power basis 1, zeta, ..., zeta^(phi(n)-1), always reduced modulo the n-th
/// cyclotomic polynomial, so equal values have identical representations.
class Scalar {
public:
    /// Rational zero.
    Scalar();
    /// Zero of the given field.
    explicit Scalar(FieldSpec field);

    static Scalar integer(long value, FieldSpec field = {});
    static Scalar rational(Rational value, FieldSpec field = {});
    /// zeta_n^k in Q(zeta_n).
    static Scalar root_of_unity(FieldSpec field, long power = 1);
    /// Polynomial in zeta (coefficient k multiplies zeta^k), reduced mod Phi_n.
    /// For the rational field the vector must have length 1.
    static Scalar from_coefficients(std::vector<Rational> coefficients, FieldSpec field);

    FieldSpec field() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

    /// Throws DivisionByZeroError on zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    Scalar(const detail::CyclotomicField* field, std::vector<Rational> coeffs);
    void require_same_field(const Scalar& other) const;

    const detail::CyclotomicField* field_ = nullptr; // null means Q
    std::vector<Rational> coeffs_;
};

enum class ScalarOp { add, sub, mul };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);
Scalar scalar_invert(const Scalar& a);

/// Integer coefficients of Phi_n, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(std::uint32_t order);
/// Euler phi.
std::size_t euler_phi(std::uint32_t n);
/// Reduce an arbitrary polynomial in zeta_n modulo Phi_n.
Scalar cyclotomic_reduce(std::vector<Rational> poly, std::uint32_t order);

/// Canonical text: "p" or "p/q" for rationals, "[c0, c1, ...]" for cyclotomics.
std::string to_string(const Scalar& value);
/// Inverse of to_string. A bare rational is accepted in a cyclotomic field and
/// bracketed lists of any length are reduced. Throws ParseError.
Scalar parse_scalar(std::string_view text, FieldSpec field);
Rational parse_rational(std::string_view text);

} // namespace qhsa
