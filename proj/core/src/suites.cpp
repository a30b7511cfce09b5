#include "qhsa/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "qhsa/checks.hpp"
#include "qhsa/drinfeld.hpp"

namespace qhsa {

namespace {

struct SuiteInfo {
    Suite suite;
    const char* name;
    std::vector<Suite> requires_passed;
    bool needs_r;
};

const std::vector<SuiteInfo>& suite_table() {
    static const std::vector<SuiteInfo> table = {
        {Suite::algebra, "algebra", {}, false},
        {Suite::structure, "structure", {Suite::algebra}, false},
        {Suite::quasi_bialgebra, "quasi_bialgebra", {Suite::structure}, false},
        {Suite::antipode, "antipode", {Suite::structure}, false},
        {Suite::quasi_triangular, "quasi_triangular", {Suite::structure}, true},
        {Suite::triangular, "triangular", {Suite::structure}, true},
        {Suite::qqybe, "qqybe", {Suite::structure}, true},
        {Suite::pentagon_consequences, "pentagon_consequences", {Suite::quasi_bialgebra}, false},
        {Suite::leg_exchange, "leg_exchange", {Suite::quasi_bialgebra, Suite::antipode}, false},
        {Suite::eta_absorption, "eta_absorption", {Suite::antipode}, false},
        {Suite::drinfeld, "drinfeld", {Suite::quasi_bialgebra, Suite::antipode}, false},
    };
    return table;
}

const SuiteInfo& info(Suite s) {
    for (const auto& i : suite_table()) {
        if (i.suite == s) return i;
    }
    throw DomainError("unknown suite");
}

CheckReport run_one(const QhsaStructure& h, Suite s) {
    switch (s) {
    case Suite::algebra: return validate_algebra(h.algebra);
    case Suite::structure: return validate_structure(h);
    case Suite::quasi_bialgebra: return check_quasi_bialgebra(h);
    case Suite::antipode: return check_antipode_axioms(h);
    case Suite::quasi_triangular: return check_quasi_triangular(h);
    case Suite::triangular: return check_triangular(h);
    case Suite::qqybe: return check_qqybe(h);
    case Suite::pentagon_consequences: return check_pentagon_consequences(h);
    case Suite::leg_exchange: return check_leg_exchange(h);
    case Suite::eta_absorption: return check_eta_absorption(h);
    case Suite::drinfeld: {
        CheckReport report;
        try {
            report = run_drinfeld_battery(h, compute_drinfeld_twist(h));
        } catch (const VerificationError& e) {
            report.fail("drinfeld.construction", Witness{{}, std::nullopt, e.what()});
        }
        return report;
    }
    }
    throw DomainError("unknown suite");
}

} // namespace

std::string to_string(Suite suite) {
    return info(suite).name;
}

Suite parse_suite(const std::string& name) {
    for (const auto& i : suite_table()) {
        if (name == i.name) return i.suite;
    }
    throw ParseError("unknown suite '" + name + "'");
}

std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    for (const auto& i : suite_table()) out.push_back(i.suite);
    return out;
}

std::vector<Suite> default_suites() {
    auto out = all_suites();
    out.erase(std::remove(out.begin(), out.end(), Suite::triangular), out.end());
    return out;
}

std::vector<SuiteResult> run_suites(const QhsaStructure& h, const std::vector<Suite>& selection) {
    check_shapes(h);
    // Prerequisites run implicitly (and are reported only when selected).
    std::map<Suite, bool> passed;
    std::vector<SuiteResult> results;
    auto selected = [&](Suite s) { return std::find(selection.begin(), selection.end(), s) != selection.end(); };

    std::function<bool(Suite)> ensure;
    ensure = [&](Suite s) -> bool {
        if (auto it = passed.find(s); it != passed.end()) return it->second;
        const auto& si = info(s);
        SuiteResult result{s, {}, 0, std::nullopt};
        for (Suite pre : si.requires_passed) {
            if (!ensure(pre)) {
                result.skipped = "prerequisite suite '" + to_string(pre) + "' did not pass";
                break;
            }
        }
        if (!result.skipped && si.needs_r && !h.r_matrix) result.skipped = "no R-matrix";
        if (!result.skipped) {
            auto start = std::chrono::steady_clock::now();
            result.report = run_one(h, s);
            result.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        bool ok = !result.skipped && result.report.passed();
        passed[s] = ok;
        if (selected(s)) results.push_back(std::move(result));
        return ok;
    };
    for (const auto& si : suite_table()) {
        if (selected(si.suite)) ensure(si.suite);
    }
    return results;
}

bool suites_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.report.passed(); });
}

} // namespace qhsa
