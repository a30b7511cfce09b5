#include "qhsa/report_document.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace qhsa {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson witness_json(const Witness& w) {
    OrderedJson out;
    out["basis"] = w.basis;
    out["difference"] = w.difference ? OrderedJson(to_string(*w.difference)) : OrderedJson(nullptr);
    out["detail"] = w.detail;
    return out;
}

OrderedJson group_json(const ReportGroup& r) {
    OrderedJson out;
    out["name"] = r.name;
    out["status"] = r.skipped ? "skipped" : (r.report.passed() ? "pass" : "fail");
    if (r.skipped) out["note"] = *r.skipped;
    auto entries = OrderedJson::array();
    for (const auto& e : r.report.entries()) {
        OrderedJson entry;
        entry["id"] = e.id;
        entry["status"] = to_string(e.status);
        if (e.witness) entry["witness"] = witness_json(*e.witness);
        if (!e.note.empty()) entry["note"] = e.note;
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    if (!r.report.values().empty()) {
        auto values = OrderedJson::array();
        for (const auto& v : r.report.values()) {
            values.push_back(OrderedJson{{"id", v.id}, {"value", to_string(v.value)}});
        }
        out["values"] = std::move(values);
    }
    return out;
}

std::string milliseconds(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

std::string engine_version() {
    return QHSA_VERSION;
}

ReportGroup to_group(const SuiteResult& result) {
    return {to_string(result.suite), result.report, result.elapsed_ms, result.skipped};
}

std::vector<ReportGroup> to_groups(const std::vector<SuiteResult>& results) {
    std::vector<ReportGroup> out;
    for (const auto& r : results) out.push_back(to_group(r));
    return out;
}

bool section_passed(const ReportSection& section) {
    return std::all_of(section.groups.begin(), section.groups.end(),
                       [](const ReportGroup& g) { return g.report.passed(); });
}

bool sections_passed(const std::vector<ReportSection>& sections) {
    return std::all_of(sections.begin(), sections.end(), section_passed);
}

std::string word_to_string(const Word& word) {
    if (word.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += "(x)";
        out += "e" + std::to_string(word[i]);
    }
    return out;
}

std::string report_to_json(const std::vector<ReportSection>& sections, const ReportOptions& options) {
    OrderedJson root;
    root["engine_version"] = engine_version();
    auto runs = OrderedJson::array();
    for (const auto& section : sections) {
        OrderedJson run;
        run["fixture"] = section.fixture;
        run["status"] = section_passed(section) ? "pass" : "fail";
        auto groups = OrderedJson::array();
        for (const auto& g : section.groups) groups.push_back(group_json(g));
        run["suites"] = std::move(groups);
        runs.push_back(std::move(run));
    }
    root["status"] = sections_passed(sections) ? "pass" : "fail";
    root["runs"] = std::move(runs);
    if (options.include_timing) {
        auto timing = OrderedJson::array();
        for (const auto& section : sections) {
            for (const auto& g : section.groups) {
                timing.push_back(OrderedJson{{"fixture", section.fixture},
                                             {"suite", g.name},
                                             {"elapsed_ms", std::stod(milliseconds(g.elapsed_ms))}});
            }
        }
        root["timing"] = std::move(timing);
    }
    return root.dump(2) + "\n";
}

std::string report_to_text(const std::vector<ReportSection>& sections, const ReportOptions& options) {
    std::string out;
    for (const auto& section : sections) {
        out += "== " + section.fixture + (section_passed(section) ? " (pass)\n" : " (fail)\n");
        for (const auto& r : section.groups) {
            out += "-- " + r.name;
            if (r.skipped) {
                out += ": skipped (" + *r.skipped + ")\n";
                continue;
            }
            if (options.include_timing) out += " [" + milliseconds(r.elapsed_ms) + " ms]";
            out += "\n";
            for (const auto& e : r.report.entries()) {
                std::string status = e.status == CheckStatus::pass ? "PASS" : e.status == CheckStatus::fail ? "FAIL" : "SKIP";
                out += "  " + status + "  " + e.id;
                if (!e.note.empty()) out += "  (" + e.note + ")";
                out += "\n";
                if (e.witness) {
                    out += "        at " + word_to_string(e.witness->basis);
                    if (!e.witness->detail.empty()) out += " [" + e.witness->detail + "]";
                    if (e.witness->difference) out += ": lhs - rhs = " + to_string(*e.witness->difference);
                    out += "\n";
                }
            }
            for (const auto& v : r.report.values()) out += "  value " + v.id + " = " + to_string(v.value) + "\n";
        }
    }
    out += sections_passed(sections) ? "overall: pass\n" : "overall: fail\n";
    return out;
}

} // namespace qhsa
