#include "qhsa/algebra.hpp"

#include <algorithm>

#include "qhsa/report.hpp"
#include "qhsa/tensor.hpp"

namespace qhsa {

GradedAlgebra::GradedAlgebra(FieldSpec field, std::vector<std::uint8_t> parity, std::vector<Scalar> unit,
                             const std::vector<ProductEntry>& products)
    : field_(field), parity_(std::move(parity)), unit_(std::move(unit)) {
    const std::uint32_t d = dimension();
    if (d == 0) {
        throw DomainError("algebra dimension must be positive");
    }
    for (auto p : parity_) {
        if (p > 1) throw DomainError("parity must be 0 or 1");
    }
    if (unit_.size() != d) {
        throw DomainError("unit has " + std::to_string(unit_.size()) + " coordinates, expected " +
                          std::to_string(d));
    }
    for (const auto& u : unit_) {
        if (u.field() != field_) throw FieldMismatchError("unit coordinate in wrong field");
    }
    std::vector<std::vector<Scalar>> dense(static_cast<std::size_t>(d) * d);
    for (const auto& e : products) {
        if (e.left >= d || e.right >= d || e.result >= d) {
            throw DomainError("multiplication entry (" + std::to_string(e.left) + ", " + std::to_string(e.right) +
                              ", " + std::to_string(e.result) + ") out of range");
        }
        if (e.coeff.field() != field_) throw FieldMismatchError("multiplication coefficient in wrong field");
        auto& row = dense[static_cast<std::size_t>(e.left) * d + e.right];
        if (row.empty()) row.assign(d, Scalar(field_));
        row[e.result] += e.coeff;
    }
    table_.resize(dense.size());
    for (std::size_t slot = 0; slot < dense.size(); ++slot) {
        for (std::uint32_t k = 0; k < dense[slot].size(); ++k) {
            if (!dense[slot][k].is_zero()) table_[slot].push_back({k, dense[slot][k]});
        }
    }
}

std::span<const Term> GradedAlgebra::product(std::uint32_t left, std::uint32_t right) const {
    return table_.at(static_cast<std::size_t>(left) * dimension() + right);
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (a.field_ != b.field_ || a.parity_ != b.parity_ || a.unit_ != b.unit_) return false;
    for (std::size_t slot = 0; slot < a.table_.size(); ++slot) {
        const auto& x = a.table_[slot];
        const auto& y = b.table_[slot];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].index != y[i].index || !(x[i].coeff == y[i].coeff)) return false;
        }
    }
    return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

CheckReport validate_algebra(const AlgebraPtr& algebra) {
    const auto& alg = *algebra;
    const std::uint32_t d = alg.dimension();
    CheckReport report;

    {
        std::optional<Witness> bad;
        for (std::uint32_t i = 0; i < d && !bad; ++i) {
            for (std::uint32_t j = 0; j < d && !bad; ++j) {
                for (const auto& t : alg.product(i, j)) {
                    if (alg.parity(t.index) != (alg.parity(i) ^ alg.parity(j))) {
                        bad = Witness{{i, j}, std::nullopt,
                                      "product has a component of parity " + std::to_string(alg.parity(t.index)) +
                                          " at e" + std::to_string(t.index)};
                        break;
                    }
                }
            }
        }
        if (bad) report.fail("algebra.grading", std::move(*bad)); else report.pass("algebra.grading");
    }

    {
        std::optional<Witness> bad;
        for (std::uint32_t i = 0; i < d; ++i) {
            if (!alg.unit()[i].is_zero() && alg.parity(i) != 0) {
                bad = Witness{{i}, std::nullopt, "unit has a component on an odd basis vector"};
                break;
            }
        }
        if (bad) report.fail("algebra.unit_even", std::move(*bad)); else report.pass("algebra.unit_even");
    }

    TensorElement one = TensorElement::unit(algebra, 1);
    {
        EqualityCheck check(report, "algebra.unit");
        for (std::uint32_t i = 0; i < d && !check.failed(); ++i) {
            auto e = TensorElement::basis(algebra, {i});
            check.compare(one * e, e, {i}, "1 * e");
            check.compare(e * one, e, {i}, "e * 1");
        }
    }

    {
        EqualityCheck check(report, "algebra.associativity");
        std::vector<TensorElement> basis;
        for (std::uint32_t i = 0; i < d; ++i) basis.push_back(TensorElement::basis(algebra, {i}));
        for (std::uint32_t i = 0; i < d && !check.failed(); ++i) {
            for (std::uint32_t j = 0; j < d && !check.failed(); ++j) {
                auto ij = basis[i] * basis[j];
                for (std::uint32_t k = 0; k < d && !check.failed(); ++k) {
                    check.compare(ij * basis[k], basis[i] * (basis[j] * basis[k]), {i, j, k});
                }
            }
        }
    }
    return report;
}

} // namespace qhsa
