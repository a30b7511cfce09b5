#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsa/structure.hpp"

namespace qhsa {

enum class Suite {
    algebra,
    structure,
    quasi_bialgebra,
    antipode,
    quasi_triangular,
    triangular,
    qqybe,
    pentagon_consequences,
    leg_exchange,
    eta_absorption,
    drinfeld,
};

std::string to_string(Suite suite);
/// Throws ParseError for unknown names.
Suite parse_suite(const std::string& name);
/// Every suite in declaration order.
std::vector<Suite> all_suites();
/// Everything except triangular, which most quasi-triangular structures are not.
std::vector<Suite> default_suites();

struct SuiteResult {
    Suite suite;
    CheckReport report;
    double elapsed_ms = 0;
    /// Set when the whole suite was skipped.
    std::optional<std::string> skipped;
};

/// Runs the selected suites in declaration order. A suite whose prerequisite
/// failed is skipped, as are R-matrix suites on structures without R.
std::vector<SuiteResult> run_suites(const QhsaStructure& h, const std::vector<Suite>& selection);

bool suites_passed(const std::vector<SuiteResult>& results);

} // namespace qhsa
