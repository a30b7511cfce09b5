// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <functional>
#include <iostream>
#include <sstream>

#include "qhsa/checks.hpp"
#include "qhsa/drinfeld.hpp"
#include "qhsa_cli/cli.hpp"
#include "test_support.hpp"

using namespace qhsa;
using namespace qhsa::testing;

namespace {

class Criterion {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void require_pass(const CheckReport& report, const std::string& what) {
        for (const auto& id : report.failed_ids()) failures_.push_back(what + ": " + id);
        if (report.entries().empty()) failures_.push_back(what + ": no entries");
    }
    bool passed() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

bool has_witness(const CheckReport& report, const std::string& id) {
    const auto* e = report.find(id);
    return e && e->status == CheckStatus::fail && e->witness;
}

void axiom_suites(Criterion& c) {
    for (const auto* name : {"trivial", "ext", "h2", "h2r", "h2ext"}) {
        auto h = load_fixture(name);
        c.require_pass(validate_algebra(h.algebra), std::string(name) + " algebra");
        c.require_pass(validate_structure(h), std::string(name) + " structure");
        c.require_pass(check_quasi_bialgebra(h), std::string(name) + " quasi-bialgebra");
        c.require_pass(check_antipode_axioms(h), std::string(name) + " antipode");
    }
    for (const auto* name : {"h2r", "ext"}) {
        auto h = load_fixture(name);
        c.require_pass(check_quasi_triangular(h), std::string(name) + " quasi-triangular");
        c.require_pass(check_qqybe(h), std::string(name) + " quasi-Yang-Baxter");
    }
    c.require_pass(check_triangular(load_fixture("ext")), "ext triangular");

    const std::vector<Suite> base{Suite::algebra, Suite::structure, Suite::quasi_bialgebra, Suite::antipode};
    auto pentagon = load_fixture("h2ext-broken-pentagon");
    c.require(failing_ids(pentagon, base) == std::set<std::string>{"qba.pentagon"},
              "broken pentagon fails exactly qba.pentagon");
    c.require(has_witness(check_quasi_bialgebra(pentagon), "qba.pentagon"), "broken pentagon witness");

    auto antipode = load_fixture("h2-broken-antipode");
    c.require(failing_ids(antipode, base) ==
                  std::set<std::string>{"antipode.phi_identity", "antipode.phi_inverse_identity"},
              "broken antipode fails exactly its two antipode identities");
    c.require(has_witness(check_antipode_axioms(antipode), "antipode.phi_identity"), "broken antipode witness");

    auto h2ext = load_fixture("h2ext");
    auto f = twistor_for(h2ext, "h2ext-noncocycle");
    auto twistor_report = check_twistor(h2ext, f.element);
    twistor_report.append(check_cocycle(h2ext, f));
    c.require(failing_ids(twistor_report) == std::set<std::string>{"twistor.cocycle"},
              "non-cocycle twistor fails exactly twistor.cocycle");
    c.require(has_witness(twistor_report, "twistor.cocycle"), "non-cocycle witness");
}

void sign_engine(Criterion& c) {
    for (const auto* name : {"h2", "h2ext", "h2ext-twisted"}) {
        auto h = load_fixture(name);
        c.require_pass(check_pentagon_consequences(h), std::string(name) + " pentagon consequences");
    }
    for (const auto* name : {"h2ext", "h2ext-twisted"}) {
        auto h = load_fixture(name);
        auto expected = embed_legs(h.phi, {0, 1, 2}, 4);
        c.require(phi_tensor_one_by_hand(h) == expected, std::string(name) + " hand-expanded Phi (x) 1");
    }
}

void twisting(Criterion& c) {
    std::size_t pairs = 0;
    for (const auto& name : positive_fixtures()) {
        auto h = load_fixture(name);
        const bool triangular = h.r_matrix && check_triangular(h).passed();
        auto suites = default_suites();
        if (triangular) suites.push_back(Suite::triangular);

        auto identity = make_twistor(h, unit_tensor(h, 2));
        c.require_pass(compare_structures(h, twist_structure(h, identity), "identity"), name + " identity twist");

        auto names = twistors_for(h);
        pairs += names.size();
        for (const auto& f_name : names) {
            auto f = twistor_for(h, f_name);
            auto twisted = twist_structure(h, f);
            c.require(failing_ids(twisted, suites).empty(), name + " twisted by " + f_name);
            for (const auto& g_name : names) {
                auto g = twistor_for(h, g_name);
                c.require_pass(twist_composition_check(h, f, g), name + " composition " + f_name + ", " + g_name);
            }
        }
    }
    c.require(pairs == 8, "bundled twistors apply to 8 fixture pairs, found " + std::to_string(pairs));
    bool rejected = false;
    try {
        twistor_for(load_fixture("ext"), "ext-invalid-theta");
    } catch (const InvalidTwistorError&) {
        rejected = true;
    }
    c.require(rejected, "invalid twistor rejected");
}

void opposites(Criterion& c) {
    for (const auto& name : positive_fixtures()) {
        auto h = load_fixture(name);
        auto op = opposite_structure(h);
        c.require(failing_ids(op, default_suites()).empty(), name + " opposite passes all suites");
        c.require_pass(compare_structures(h, opposite_structure(op), "double_opposite"), name + " double opposite");
    }
    for (const auto* name : {"ext", "h2", "h2r", "h2ext"}) {
        auto h = load_fixture(name);
        for (const auto& f_name : twistors_for(h)) {
            c.require_pass(check_opposite_twist_compat(h, twistor_for(h, f_name)),
                           std::string(name) + " opposite of twist by " + f_name);
        }
    }
}

void twist_by_r(Criterion& c) {
    for (const auto* name : {"ext", "h2r"}) {
        auto report = verify_twist_by_r(load_fixture(name));
        c.require_pass(report, std::string(name) + " twist by R");
        for (const auto* id : {"r_twist.delta", "r_twist.phi", "r_twist.r"}) {
            const auto* e = report.find(id);
            c.require(e && e->status == CheckStatus::pass, std::string(name) + " " + id);
        }
    }
}

void drinfeld_battery(Criterion& c) {
    for (const auto& name : positive_fixtures()) {
        auto h = load_fixture(name);
        auto d = compute_drinfeld_twist(h);
        auto report = run_drinfeld_battery(h, d);
        c.require_pass(report, name + " Drinfeld battery");
        std::vector<std::string> required{"drinfeld.gamma_expressions", "drinfeld.gamma_bar_expressions",
                                          "drinfeld.gamma_conjugation", "drinfeld.gamma_bar_conjugation",
                                          "drinfeld.inverse", "drinfeld.twist_counit",
                                          "drinfeld.alpha_gamma", "drinfeld.beta_gamma_bar",
                                          "drinfeld.alternative_twist", "drinfeld.alternative_twist_inverse",
                                          "drinfeld.coproduct_conjugation", "drinfeld.primed_coassociator",
                                          "drinfeld.primed_alpha", "drinfeld.primed_beta"};
        if (h.r_matrix) {
            required.insert(required.end(), {"drinfeld.primed_r", "drinfeld.primed_r_gamma"});
        }
        for (const auto& id : required) {
            const auto* e = report.find(id);
            c.require(e && e->status == CheckStatus::pass, name + " " + id);
        }
    }
}

void concrete_values(Criterion& c) {
    auto h2 = load_fixture("h2");
    auto d = compute_drinfeld_twist(h2);
    auto f_d = element(h2.algebra, 2, {{{0, 0}, "1"}, {{0, 1}, "1"}, {{1, 0}, "1"}, {{1, 1}, "-1"}});
    auto gamma = element(h2.algebra, 2, {{{0, 0}, "1"}, {{0, 1}, "-1"}, {{1, 0}, "-1"}, {{1, 1}, "-1"}});
    c.require(d.f_d == f_d, "F_D(h2)");
    c.require(d.f_d * d.f_d == unit_tensor(h2, 2), "F_D(h2) squares to 1 (x) 1");
    c.require(d.gamma == gamma, "gamma(h2)");
    c.require(gamma_of_function_algebra(h2) == gamma, "gamma(h2) pointwise oracle");

    auto ext = load_fixture("ext");
    c.require(compute_drinfeld_twist(ext).f_d == unit_tensor(ext, 2), "F_D(ext) = 1 (x) 1");
    c.require(prime_structure(ext).delta == ext.delta, "primed coproduct of ext equals its coproduct");
}

void io_contract(Criterion& c) {
    for (const auto& entry : std::filesystem::directory_iterator(QHSA_TEST_FIXTURE_DIR)) {
        const auto& path = entry.path();
        auto text = read_text_file(path);
        if (path.extension() == ".qhsa") {
            auto doc = parse_structure(text);
            c.require(serialize_structure(doc) == text, path.filename().string() + " byte round trip");
            c.require(serialize_structure(to_document(to_structure(doc))) == text,
                      path.filename().string() + " structure round trip");
        } else if (path.extension() == ".twist") {
            c.require(serialize_twistor(parse_twistor(text)) == text, path.filename().string() + " byte round trip");
        }
    }

    auto exit_code = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        return cli::run(args, out, err);
    };
    auto bad = std::filesystem::temp_directory_path() / "qhsa-acceptance-malformed.qhsa";
    write_text_file(bad, "{\"name\": \"x\", \"field\": \"rational\", \"dimension\": 1,");
    auto out_doc = std::filesystem::temp_directory_path() / "qhsa-acceptance-opposite.qhsa";
    auto out_twist = std::filesystem::temp_directory_path() / "qhsa-acceptance-fd.twist";
    const auto h2 = fixture_path("h2.qhsa").string();

    c.require(exit_code({"check", h2}) == 0, "check h2 exits 0");
    c.require(exit_code({"validate", h2}) == 0, "validate h2 exits 0");
    c.require(exit_code({"check", fixture_path("h2ext-broken-pentagon.qhsa").string()}) == 1,
              "check broken pentagon exits 1");
    c.require(exit_code({"check", fixture_path("h2-broken-antipode.qhsa").string()}) == 1,
              "check broken antipode exits 1");
    c.require(exit_code({"check", fixture_path("h2ext.qhsa").string(), "--twistor",
                         fixture_path("h2ext-noncocycle.twist").string()}) == 1,
              "check with non-cocycle twistor exits 1");
    c.require(exit_code({"check", bad.string()}) == 2, "check malformed exits 2");
    c.require(exit_code({"validate", bad.string()}) == 2, "validate malformed exits 2");
    c.require(exit_code({"drinfeld", bad.string()}) == 2, "drinfeld malformed exits 2");
    c.require(exit_code({"transform", bad.string(), "--opposite", "-o", out_doc.string()}) == 2,
              "transform malformed exits 2");
    c.require(exit_code({"transform", h2, "--opposite", "--name", "h2", "-o", out_doc.string()}) == 0,
              "transform h2 exits 0");
    c.require(read_text_file(out_doc) == read_text_file(h2), "opposite of h2 equals h2");
    c.require(exit_code({"drinfeld", h2, "--verify", "--emit-twist", out_twist.string()}) == 0,
              "drinfeld h2 exits 0");
    c.require(exit_code({"drinfeld", fixture_path("h2-broken-antipode.qhsa").string(), "--verify"}) == 1,
              "drinfeld on broken antipode exits 1");
    std::filesystem::remove(bad);
    std::filesystem::remove(out_doc);
    std::filesystem::remove(out_twist);
}

} // namespace

int main() {
    struct Entry {
        int number;
        const char* title;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Entry> criteria{
        {1, "axiom suites on positive fixtures; negatives fail exactly their labeled checks", axiom_suites},
        {2, "pentagon consequences and hand-expanded Koszul signs", sign_engine},
        {3, "twisted structures pass all suites; composition and identity twists", twisting},
        {4, "opposite structures, double opposite, opposite of a twist", opposites},
        {5, "twisting by R gives the opposite coproduct, coassociator and R", twist_by_r},
        {6, "Drinfeld twist battery on every fixture", drinfeld_battery},
        {7, "concrete Drinfeld values on h2 and ext", concrete_values},
        {8, "document round trips and exit-code contract", io_contract},
    };

    int failed = 0;
    for (const auto& entry : criteria) {
        Criterion c;
        try {
            entry.run(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.passed() ? "PASS" : "FAIL") << "  criterion " << entry.number << ": " << entry.title << "\n";
        for (const auto& f : c.failures()) std::cout << "        " << f << "\n";
        if (!c.passed()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
