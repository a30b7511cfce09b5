#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsa/suites.hpp"

namespace qhsa {

/// Version string of the engine, as written into reports.
std::string engine_version();

struct ReportOptions {
    /// Appends per-suite wall times under a separate "timing" key, so the
    /// rest of the document stays byte-identical across runs.
    bool include_timing = false;
};

/// A named block of report entries: a suite, or the checks on a twistor.
struct ReportGroup {
    std::string name;
    CheckReport report;
    double elapsed_ms = 0;
    std::optional<std::string> skipped;
};

ReportGroup to_group(const SuiteResult& result);
std::vector<ReportGroup> to_groups(const std::vector<SuiteResult>& results);

/// The checks run on one structure, e.g. a fixture or a transform output.
struct ReportSection {
    std::string fixture;
    std::vector<ReportGroup> groups;
};

bool section_passed(const ReportSection& section);
bool sections_passed(const std::vector<ReportSection>& sections);

std::string report_to_json(const std::vector<ReportSection>& sections, const ReportOptions& options = {});
std::string report_to_text(const std::vector<ReportSection>& sections, const ReportOptions& options = {});

/// Renders a basis word as "e0(x)e1"; the empty word is "1".
std::string word_to_string(const Word& word);

} // namespace qhsa
