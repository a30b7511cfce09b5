#include "qhsa_cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "qhsa/checks.hpp"
#include "qhsa/document.hpp"
#include "qhsa/drinfeld.hpp"
#include "qhsa/report_document.hpp"
#include "qhsa/suites.hpp"
#include "qhsa/twist.hpp"

namespace qhsa::cli {

namespace {

struct OutputOptions {
    std::string format = "text";
    std::string output;
    bool timing = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output, "Write the report to this file instead of stdout");
        cmd->add_flag("--timing", timing, "Include per-suite wall times");
    }
};

int emit(const std::vector<ReportSection>& sections, const OutputOptions& options, std::ostream& out) {
    ReportOptions report_options{options.timing};
    auto text = options.format == "json" ? report_to_json(sections, report_options)
                                         : report_to_text(sections, report_options);
    if (options.output.empty()) {
        out << text;
    } else {
        write_text_file(options.output, text);
    }
    return sections_passed(sections) ? exit_pass : exit_check_failed;
}

std::vector<Suite> parse_selection(const std::vector<std::string>& names) {
    if (names.empty()) return default_suites();
    std::vector<Suite> out;
    for (const auto& name : names) {
        if (name == "all") {
            auto all = all_suites();
            out.insert(out.end(), all.begin(), all.end());
        } else if (name == "default") {
            auto d = default_suites();
            out.insert(out.end(), d.begin(), d.end());
        } else {
            out.push_back(parse_suite(name));
        }
    }
    return out;
}

template <typename F>
ReportGroup timed_group(const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    ReportGroup group{name, body(), 0, std::nullopt};
    group.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return group;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::vector<ReportGroup> base_groups(const QhsaStructure& h) {
    return to_groups(run_suites(h, {Suite::algebra, Suite::structure}));
}

bool groups_passed(const std::vector<ReportGroup>& groups) {
    return std::all_of(groups.begin(), groups.end(), [](const ReportGroup& g) { return g.report.passed(); });
}

Twistor load_twistor_for(const QhsaStructure& h, const std::string& path, ReportSection& section) {
    auto doc = load_twistor(resolve_input(path));
    auto [element, inverse] = twistor_elements(doc, h.algebra);
    try {
        auto f = make_twistor(h, element, inverse);
        section.groups.push_back(timed_group("twistor", [&] {
            auto report = check_twistor(h, f.element);
            if (inverse) report.pass("twistor.declared_inverse");
            report.append(check_cocycle(h, f));
            return report;
        }));
        return f;
    } catch (const InvalidTwistorError& e) {
        section.groups.push_back({"twistor", e.report(), 0, std::nullopt});
        throw;
    }
}

struct Invocation {
    std::ostream& out;
    std::ostream& err;
};

int cmd_validate(const std::string& path, const OutputOptions& options, Invocation io) {
    auto h = load_structure(resolve_input(path));
    return emit({{h.name, base_groups(h)}}, options, io.out);
}

int cmd_check(const std::string& path, const std::vector<std::string>& suite_names,
              const std::vector<std::string>& twistors, const OutputOptions& options, Invocation io) {
    auto selection = parse_selection(suite_names);
    auto h = load_structure(resolve_input(path));
    std::vector<ReportSection> sections{{h.name, to_groups(run_suites(h, selection))}};
    for (const auto& twistor_path : twistors) {
        ReportSection twisted{h.name + " twisted by " + stem_of(twistor_path), {}};
        try {
            auto f = load_twistor_for(h, twistor_path, twisted);
            auto g = to_groups(run_suites(twist_structure(h, f), selection));
            twisted.groups.insert(twisted.groups.end(), g.begin(), g.end());
        } catch (const InvalidTwistorError&) {
        }
        sections.push_back(std::move(twisted));
    }
    return emit(sections, options, io.out);
}

struct TransformOptions {
    std::string input;
    std::string output;
    std::string name;
    std::string twist;
    std::string tensor;
    bool opposite = false;
    bool prime = false;
};

int cmd_transform(const TransformOptions& t, const OutputOptions& options, Invocation io) {
    int chosen = !t.twist.empty() + !t.tensor.empty() + t.opposite + t.prime;
    if (chosen != 1) {
        io.err << "transform: choose exactly one of --twist, --tensor, --opposite, --prime\n";
        return exit_input_error;
    }
    auto h = load_structure(resolve_input(t.input));
    ReportSection input{h.name, base_groups(h)};
    if (!groups_passed(input.groups)) return emit({input}, options, io.out);

    QhsaStructure result = h;
    if (!t.twist.empty()) {
        try {
            result = twist_structure(h, load_twistor_for(h, t.twist, input));
        } catch (const InvalidTwistorError&) {
            return emit({input}, options, io.out);
        }
    } else if (!t.tensor.empty()) {
        auto b = load_structure(resolve_input(t.tensor));
        result = tensor_product_structure(h, b);
    } else if (t.opposite) {
        result = opposite_structure(h);
    } else {
        result = prime_structure(h);
    }
    result.name = t.name.empty() ? stem_of(t.output) : t.name;
    write_text_file(t.output, serialize_structure(to_document(result)));
    ReportSection output{result.name, to_groups(run_suites(result, default_suites()))};
    return emit({input, output}, options, io.out);
}

int cmd_drinfeld(const std::string& path, const std::string& emit_twist, bool verify, const OutputOptions& options,
                 Invocation io) {
    auto h = load_structure(resolve_input(path));
    ReportSection section{h.name, to_groups(run_suites(h, {Suite::quasi_bialgebra, Suite::antipode}))};
    if (!groups_passed(section.groups)) return emit({section}, options, io.out);

    std::optional<DrinfeldData> data;
    section.groups.push_back(timed_group("drinfeld", [&] {
        CheckReport report;
        try {
            data = compute_drinfeld_twist(h);
            report.pass("drinfeld.construction");
        } catch (const VerificationError& e) {
            report.fail("drinfeld.construction", Witness{{}, std::nullopt, e.what()});
            return report;
        }
        if (verify) {
            report.append(run_drinfeld_battery(h, *data));
        } else {
            report.record_value("drinfeld.gamma", data->gamma);
            report.record_value("drinfeld.gamma_bar", data->gamma_bar);
            report.record_value("drinfeld.f_d", data->f_d);
            report.record_value("drinfeld.f_d_inverse", data->f_d_inverse);
        }
        return report;
    }));
    if (data && !emit_twist.empty()) {
        auto doc = to_twistor_document(stem_of(emit_twist), data->f_d, data->f_d_inverse, data->eps_beta);
        write_text_file(emit_twist, serialize_twistor(doc));
    }
    return emit({section}, options, io.out);
}

} // namespace

std::filesystem::path resolve_input(const std::string& path) {
    std::filesystem::path p(path);
    if (std::filesystem::exists(p) || p.is_absolute()) return p;
    const char* env = std::getenv("QHSA_FIXTURE_DIR");
    std::filesystem::path dir = env && *env ? env : QHSA_DEFAULT_FIXTURE_DIR;
    auto candidate = dir / p;
    return std::filesystem::exists(candidate) ? candidate : p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of graded quasi-Hopf superalgebra structures", "qhsa"};
    app.set_version_flag("--version", engine_version());
    app.require_subcommand(1);

    std::string path;
    OutputOptions options;
    Invocation io{out, err};
    std::function<int()> action;

    auto* validate = app.add_subcommand("validate", "Check the algebra and structure-map axioms of a document");
    validate->add_option("structure", path, "Structure document (.qhsa)")->required();
    options.add_to(validate);
    validate->callback([&] { action = [&] { return cmd_validate(path, options, io); }; });

    std::vector<std::string> suite_names, twistors;
    auto* check = app.add_subcommand("check", "Run check suites on a structure");
    check->add_option("structure", path, "Structure document (.qhsa)")->required();
    check->add_option("--suites", suite_names, "Suites to run (comma separated; 'all' or 'default')")->delimiter(',');
    check->add_option("--twistor", twistors, "Also check this twistor and the structure twisted by it");
    options.add_to(check);
    check->callback([&] { action = [&] { return cmd_check(path, suite_names, twistors, options, io); }; });

    TransformOptions t;
    auto* transform = app.add_subcommand("transform", "Write a transformed structure and check it");
    transform->add_option("structure", t.input, "Structure document (.qhsa)")->required();
    transform->add_option("-o,--out", t.output, "Output structure document")->required();
    transform->add_option("--name", t.name, "Name of the output structure (default: output file stem)");
    transform->add_option("--twist", t.twist, "Twist by this twistor document");
    transform->add_option("--tensor", t.tensor, "Graded tensor product with this structure");
    transform->add_flag("--opposite", t.opposite, "Opposite structure");
    transform->add_flag("--prime", t.prime, "Primed structure");
    options.add_to(transform);
    transform->callback([&] { action = [&] { return cmd_transform(t, options, io); }; });

    std::string emit_twist;
    bool verify = false;
    auto* drinfeld = app.add_subcommand("drinfeld", "Compute the Drinfeld twist of a structure");
    drinfeld->add_option("structure", path, "Structure document (.qhsa)")->required();
    drinfeld->add_option("--emit-twist", emit_twist, "Write F_D with its normalization as a twistor document");
    drinfeld->add_flag("--verify", verify, "Run the full Drinfeld-twist battery");
    options.add_to(drinfeld);
    drinfeld->callback([&] { action = [&] { return cmd_drinfeld(path, emit_twist, verify, options, io); }; });

    std::vector<const char*> argv{"qhsa"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_pass : exit_input_error;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const FieldMismatchError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_input_error;
}

} // namespace qhsa::cli
