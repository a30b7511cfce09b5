#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsa/tensor.hpp"

namespace qhsa {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

/// Where a check failed: the basis input(s) at which the two sides differ and
/// the difference lhs - rhs there.
struct Witness {
    Word basis;
    std::optional<TensorElement> difference;
    std::string detail;
};

struct CheckEntry {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::optional<Witness> witness;
    std::string note;
};

/// A named element computed during a check, e.g. gamma or a twisted alpha.
struct RecordedValue {
    std::string id;
    TensorElement value;
};

class CheckReport {
public:
    void pass(const std::string& id, std::string note = {});
    void fail(const std::string& id, Witness witness, std::string note = {});
    void skip(const std::string& id, std::string note);
    void add(CheckEntry entry);
    void append(const CheckReport& other);
    void record_value(const std::string& id, TensorElement value);

    /// Compares two elements; records pass or a failure with lhs - rhs as the witness.
    bool expect_equal(const std::string& id, const TensorElement& lhs, const TensorElement& rhs,
                      Word basis = {}, std::string detail = {});
    bool expect_true(const std::string& id, bool condition, std::string detail = {});

    /// True when no entry failed (skips do not count as failures).
    bool passed() const;
    /// First entry with this id, or null.
    const CheckEntry* find(const std::string& id) const;
    std::vector<std::string> failed_ids() const;
    const std::vector<CheckEntry>& entries() const { return entries_; }
    const std::vector<RecordedValue>& values() const { return values_; }
    const RecordedValue* find_value(const std::string& id) const;

private:
    std::vector<CheckEntry> entries_;
    std::vector<RecordedValue> values_;
};

/// Accumulates per-basis comparisons of one identity into a single report
/// entry. The first mismatch becomes the witness; later comparisons are skipped.
class EqualityCheck {
public:
    EqualityCheck(CheckReport& report, std::string id);
    EqualityCheck(const EqualityCheck&) = delete;
    EqualityCheck& operator=(const EqualityCheck&) = delete;
    ~EqualityCheck();

    bool compare(const TensorElement& lhs, const TensorElement& rhs, const Word& basis = {},
                 const std::string& detail = {});
    bool failed() const { return witness_.has_value(); }
    /// Writes the entry; called by the destructor if not called explicitly.
    void finish();

private:
    CheckReport& report_;
    std::string id_;
    std::optional<Witness> witness_;
    bool finished_ = false;
};

} // namespace qhsa
