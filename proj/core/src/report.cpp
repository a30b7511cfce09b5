#include "qhsa/report.hpp"

#include <algorithm>

namespace qhsa {

std::string to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

void CheckReport::pass(const std::string& id, std::string note) {
    entries_.push_back({id, CheckStatus::pass, std::nullopt, std::move(note)});
}

void CheckReport::fail(const std::string& id, Witness witness, std::string note) {
    entries_.push_back({id, CheckStatus::fail, std::move(witness), std::move(note)});
}

void CheckReport::skip(const std::string& id, std::string note) {
    entries_.push_back({id, CheckStatus::skipped, std::nullopt, std::move(note)});
}

void CheckReport::add(CheckEntry entry) {
    entries_.push_back(std::move(entry));
}

void CheckReport::append(const CheckReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    values_.insert(values_.end(), other.values_.begin(), other.values_.end());
}

void CheckReport::record_value(const std::string& id, TensorElement value) {
    values_.push_back({id, std::move(value)});
}

bool CheckReport::expect_equal(const std::string& id, const TensorElement& lhs, const TensorElement& rhs,
                               Word basis, std::string detail) {
    if (lhs == rhs) {
        pass(id);
        return true;
    }
    fail(id, Witness{std::move(basis), lhs - rhs, std::move(detail)});
    return false;
}

bool CheckReport::expect_true(const std::string& id, bool condition, std::string detail) {
    if (condition) {
        pass(id);
        return true;
    }
    fail(id, Witness{{}, std::nullopt, std::move(detail)});
    return false;
}

bool CheckReport::passed() const {
    return std::none_of(entries_.begin(), entries_.end(),
                        [](const CheckEntry& e) { return e.status == CheckStatus::fail; });
}

const CheckEntry* CheckReport::find(const std::string& id) const {
    for (const auto& e : entries_) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

const RecordedValue* CheckReport::find_value(const std::string& id) const {
    for (const auto& v : values_) {
        if (v.id == id) return &v;
    }
    return nullptr;
}

std::vector<std::string> CheckReport::failed_ids() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) {
        if (e.status == CheckStatus::fail) out.push_back(e.id);
    }
    return out;
}

EqualityCheck::EqualityCheck(CheckReport& report, std::string id) : report_(report), id_(std::move(id)) {}

EqualityCheck::~EqualityCheck() {
    if (!finished_) finish();
}

bool EqualityCheck::compare(const TensorElement& lhs, const TensorElement& rhs, const Word& basis,
                            const std::string& detail) {
    if (witness_) return false;
    if (lhs == rhs) return true;
    witness_ = Witness{basis, lhs - rhs, detail};
    return false;
}

void EqualityCheck::finish() {
    if (finished_) return;
    finished_ = true;
    if (witness_) {
        report_.fail(id_, std::move(*witness_));
    } else {
        report_.pass(id_);
    }
}

} // namespace qhsa
