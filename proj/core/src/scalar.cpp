#include "qhsa/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace qhsa {

namespace detail {

struct CyclotomicField {
    std::uint32_t order;
    std::vector<Rational> modulus; // monic Phi_n, lowest degree first
    std::size_t degree() const { return modulus.size() - 1; }
};

} // namespace detail

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Quotient and remainder; divisor must be nonzero after trimming.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly d = den;
    trim(d);
    trim(num);
    if (num.size() < d.size()) {
        return {{}, num};
    }
    Poly q(num.size() - d.size() + 1, Rational(0));
    const Rational& lead = d.back();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const Rational& top = num[shift + d.size() - 1];
        if (top == 0) {
            continue;
        }
        Rational c = top / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) {
            num[shift + i] -= c * d[i];
        }
    }
    trim(num);
    trim(q);
    return {q, num};
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

Poly compute_cyclotomic(std::uint32_t n) {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = poly_divmod(p, cyclotomic_polynomial(d)).first;
        }
    }
    return p;
}

std::mutex& field_mutex() {
    static std::mutex m;
    return m;
}

const detail::CyclotomicField* intern_field(std::uint32_t order) {
    static std::map<std::uint32_t, std::unique_ptr<detail::CyclotomicField>> table;
    {
        std::lock_guard lock(field_mutex());
        auto it = table.find(order);
        if (it != table.end()) {
            return it->second.get();
        }
    }
    auto modulus = compute_cyclotomic(order);
    std::lock_guard lock(field_mutex());
    auto& slot = table[order];
    if (!slot) {
        slot = std::make_unique<detail::CyclotomicField>(detail::CyclotomicField{order, std::move(modulus)});
    }
    return slot.get();
}

const detail::CyclotomicField* field_data(FieldSpec field) {
    return field.is_rational() ? nullptr : intern_field(field.order());
}

Poly reduce_mod(Poly p, const detail::CyclotomicField& f) {
    trim(p);
    if (p.size() > f.degree()) {
        p = poly_divmod(std::move(p), f.modulus).second;
    }
    p.resize(f.degree(), Rational(0));
    return p;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

std::size_t euler_phi(std::uint32_t n) {
    std::size_t result = n;
    std::uint32_t m = n;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Rational> cyclotomic_polynomial(std::uint32_t order) {
    if (order == 0) {
        throw DomainError("cyclotomic order must be positive");
    }
    return intern_field(order)->modulus;
}

FieldSpec FieldSpec::cyclotomic(std::uint32_t order) {
    if (order == 0) {
        throw DomainError("cyclotomic order must be positive");
    }
    return FieldSpec(order);
}

std::size_t FieldSpec::degree() const {
    return is_rational() ? 1 : euler_phi(order_);
}

std::string to_string(const FieldSpec& field) {
    return field.is_rational() ? "rational" : "cyclotomic:" + std::to_string(field.order());
}

FieldSpec parse_field_spec(std::string_view text) {
    text = strip(text);
    if (text == "rational") {
        return FieldSpec::rational();
    }
    constexpr std::string_view prefix = "cyclotomic:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        if (!digits.empty() && digits.size() <= 6 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            auto n = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
            if (n > 0) {
                return FieldSpec::cyclotomic(n);
            }
        }
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected 'rational' or 'cyclotomic:<n>')");
}

Scalar::Scalar() : coeffs_{Rational(0)} {}

Scalar::Scalar(FieldSpec field)
    : field_(field_data(field)), coeffs_(field.degree(), Rational(0)) {}

Scalar::Scalar(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

Scalar Scalar::integer(long value, FieldSpec field) {
    return rational(Rational(value), field);
}

Scalar Scalar::rational(Rational value, FieldSpec field) {
    Scalar s(field);
    value.canonicalize();
    s.coeffs_[0] = std::move(value);
    return s;
}

Scalar Scalar::root_of_unity(FieldSpec field, long power) {
    if (field.is_rational()) {
        throw DomainError("root_of_unity requires a cyclotomic field");
    }
    long n = field.order();
    long k = ((power % n) + n) % n;
    Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
    p[static_cast<std::size_t>(k)] = 1;
    return from_coefficients(std::move(p), field);
}

Scalar Scalar::from_coefficients(std::vector<Rational> coefficients, FieldSpec field) {
    for (auto& c : coefficients) c.canonicalize();
    if (field.is_rational()) {
        if (coefficients.size() != 1) {
            throw DomainError("a rational scalar has exactly one coefficient");
        }
        return Scalar(nullptr, std::move(coefficients));
    }
    const auto* f = field_data(field);
    return Scalar(f, reduce_mod(std::move(coefficients), *f));
}

Scalar cyclotomic_reduce(std::vector<Rational> poly, std::uint32_t order) {
    return Scalar::from_coefficients(std::move(poly), FieldSpec::cyclotomic(order));
}

FieldSpec Scalar::field() const {
    return field_ ? FieldSpec::cyclotomic(field_->order) : FieldSpec::rational();
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void Scalar::require_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw FieldMismatchError("scalar field mismatch: " + to_string(field()) + " vs " +
                                 to_string(other.field()));
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (!field_) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    coeffs_ = reduce_mod(poly_mul(coeffs_, rhs.coeffs_), *field_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero scalar");
    }
    if (!field_) {
        return Scalar(nullptr, {1 / coeffs_[0]});
    }
    // Extended Euclid: track s with s * a == r (mod Phi).
    Poly r0 = field_->modulus, r1 = coeffs_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi is irreducible.
    Rational c = 1 / r1[0];
    for (auto& x : s1) x *= c;
    return Scalar(field_, reduce_mod(std::move(s1), *field_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    return a.coeffs_ == b.coeffs_;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    }
    throw DomainError("unknown scalar operation");
}

Scalar scalar_invert(const Scalar& a) {
    return a.inverse();
}

std::string to_string(const Scalar& value) {
    auto coeffs = value.coefficients();
    if (value.field().is_rational()) {
        return coeffs[0].get_str();
    }
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += coeffs[i].get_str();
    }
    return out + "]";
}

Rational parse_rational(std::string_view text) {
    text = strip(text);
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!valid_integer(num)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos) {
        return Rational(mpz_class(num_str));
    }
    auto den = text.substr(slash + 1);
    if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string{den});
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(mpz_class(num_str), d);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(std::string_view text, FieldSpec field) {
    auto t = strip(text);
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') {
            throw ParseError("unterminated coefficient list '" + std::string(t) + "'");
        }
        if (field.is_rational()) {
            throw ParseError("coefficient list '" + std::string(t) + "' in rational field");
        }
        auto body = strip(t.substr(1, t.size() - 2));
        if (body.empty()) {
            throw ParseError("empty coefficient list");
        }
        std::vector<Rational> coeffs;
        while (true) {
            auto comma = body.find(',');
            coeffs.push_back(parse_rational(body.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
        }
        return Scalar::from_coefficients(std::move(coeffs), field);
    }
    return Scalar::rational(parse_rational(t), field);
}

} // namespace qhsa
