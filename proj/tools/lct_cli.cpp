// lct : compute exact singularity invariants of monomial ideals and
// multi-circled weights, check the threshold bound ladder, and diagnose the
// equality structure.
//
//   lct analyze <file>    full report for one instance file
//   lct random ...        seeded random corpus + property suite
//   lct compare <file>    oracle vs exact table (ideal, n <= 3)
//
// Exit codes: 0 ok, 2 parse error, 3 unsupported dimension/kind,
// 4 defect (a certified inequality or cross-check failed).
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lct/corpus.hpp"
#include "lct/instance.hpp"
#include "lct/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_unsupported = 3;
constexpr int exit_defect = 4;

struct cli_options {
    std::string format = "json";
    std::string out_path;
    std::string oracle_tolerance = "1/10";
    long long nmax_regularization = 0;
};

void emit(const cli_options& cli, const std::string& text) {
    if (cli.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cli.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + cli.out_path);
    f << text;
}

lct::analysis_options make_options(const cli_options& cli) {
    lct::analysis_options opts;
    opts.oracle.tolerance = lct::parse_rational(cli.oracle_tolerance);
    opts.oracle.validate();
    if (cli.nmax_regularization > 0)
        opts.inv.nmax_regularization = lct::integer(cli.nmax_regularization);
    return opts;
}

int run_analyze(const cli_options& cli, const std::string& path) {
    const lct::singularity_input in = lct::load_instance(path);
    const auto res = lct::analyze_instance(in, make_options(cli));
    emit(cli, cli.format == "text" ? lct::render_analysis_text(res.doc)
                                   : res.doc.dump(2) + "\n");
    return res.defect ? exit_defect : exit_ok;
}

int run_compare(const cli_options& cli, const std::string& path) {
    const lct::singularity_input in = lct::load_instance(path);
    const auto res = lct::compare_instance(in, make_options(cli));
    emit(cli, cli.format == "text" ? lct::render_compare_text(res.doc)
                                   : res.doc.dump(2) + "\n");
    return res.defect ? exit_defect : exit_ok;
}

struct random_params {
    std::size_t n = 2;
    std::size_t gens = 4;
    unsigned max_exp = 6;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    bool planted = false;
};

int run_random(const cli_options& cli, const random_params& p) {
    if (p.n < 1 || p.n > 4)
        throw lct::unsupported_instance("random corpus supports 1 <= n <= 4");
    lct::property_check_options popts;
    popts.oracle.tolerance = lct::parse_rational(cli.oracle_tolerance);
    popts.oracle.validate();
    if (cli.nmax_regularization > 0)
        popts.inv.nmax_regularization = lct::integer(cli.nmax_regularization);

    lct::deterministic_rng rng(p.seed);
    nlohmann::json instances = nlohmann::json::array();
    std::size_t defects = 0, fired = 0, oracle_checked = 0;
    for (std::size_t i = 0; i < p.count; ++i) {
        char label[32];
        std::snprintf(label, sizeof(label), "rand-%05zu", i);
        const lct::singularity_input in =
            p.planted ? lct::planted_structure(rng, p.n, 4, false, label)
                      : lct::random_ideal(rng, p.n, p.gens, p.max_exp, label);
        const auto outcome = lct::run_property_suite(in, rng, popts);
        nlohmann::json ji;
        ji["label"] = in.label;
        ji["generators"] = lct::instance_to_json(in)["generators"];
        ji["equality"] = outcome.equality_fired;
        ji["oracle_checked"] = outcome.oracle_checked;
        ji["violations"] = outcome.violations;
        ji["oracle_flags"] = outcome.oracle_flags;
        instances.push_back(std::move(ji));
        defects += outcome.violations.empty() ? 0 : 1;
        fired += outcome.equality_fired ? 1 : 0;
        oracle_checked += outcome.oracle_checked ? 1 : 0;
    }
    nlohmann::json doc;
    doc["params"] = {{"n", p.n},       {"gens", p.gens}, {"max_exp", p.max_exp},
                     {"count", p.count}, {"seed", p.seed}, {"planted", p.planted}};
    doc["instances"] = std::move(instances);
    doc["totals"] = {{"count", p.count},
                     {"defective_instances", defects},
                     {"equality_fired", fired},
                     {"oracle_checked", oracle_checked}};
    if (cli.format == "text") {
        std::string s;
        s += "random corpus: count=" + std::to_string(p.count) + " n=" + std::to_string(p.n) +
             " seed=" + std::to_string(p.seed) + (p.planted ? " (planted)" : "") + "\n";
        for (const auto& ji : doc["instances"]) {
            if (ji["violations"].empty() && ji["oracle_flags"].empty()) continue;
            s += "  " + ji["label"].get<std::string>() + ":\n";
            for (const auto& v : ji["violations"])
                s += "    DEFECT: " + v.get<std::string>() + "\n";
            for (const auto& v : ji["oracle_flags"])
                s += "    oracle: " + v.get<std::string>() + "\n";
        }
        s += "defective instances: " + std::to_string(defects) + "\n";
        s += "equality fired: " + std::to_string(fired) + "\n";
        s += "oracle checked: " + std::to_string(oracle_checked) + "\n";
        emit(cli, s);
    } else {
        emit(cli, doc.dump(2) + "\n");
    }
    return defects == 0 ? exit_ok : exit_defect;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact singularity invariants of monomial ideals: Lelong numbers, "
                 "mixed Monge-Ampere masses, log canonical threshold, and the "
                 "threshold bound ladder"};
    app.require_subcommand(1);

    cli_options cli;
    app.add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--out", cli.out_path, "write the report to a file instead of stdout");
    app.add_option("--oracle-tolerance", cli.oracle_tolerance,
                   "relative oracle tolerance as p/q")
        ->capture_default_str();
    app.add_option("--nmax-regularization", cli.nmax_regularization,
                   "cap for the regularization parameter N (0 = default rule)");

    std::string analyze_path, compare_path;
    auto* analyze = app.add_subcommand("analyze", "full report for one instance file");
    analyze->add_option("file", analyze_path, "instance file (JSON)")->required();

    random_params rp;
    auto* random = app.add_subcommand("random", "seeded random corpus + property suite");
    random->add_option("--n", rp.n, "ambient dimension (<= 4)")->required();
    random->add_option("--gens", rp.gens, "max generators per instance")
        ->capture_default_str();
    random->add_option("--max-exp", rp.max_exp, "max exponent")->capture_default_str();
    random->add_option("--count", rp.count, "number of instances")->capture_default_str();
    random->add_option("--seed", rp.seed, "PRNG seed")->capture_default_str();
    random->add_flag("--planted", rp.planted,
                     "plant the scaled-simplex structure instead of sampling freely");

    auto* compare = app.add_subcommand("compare", "oracle vs exact table (ideal, n <= 3)");
    compare->add_option("file", compare_path, "instance file (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(cli, analyze_path);
        if (*random) return run_random(cli, rp);
        if (*compare) return run_compare(cli, compare_path);
    } catch (const lct::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const lct::invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_parse;
    } catch (const lct::unsupported_instance& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const lct::theorem_violation& e) {
        std::cerr << "defect: " << e.what() << "\n";
        return exit_defect;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
