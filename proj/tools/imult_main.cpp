// imult: local intersection multiplicity of two affine plane curves.
//
//   imult compute  --f EXPR --g EXPR [--point "px,py"] [--trace] [--json]
//   imult examples [--json]
//   imult verify   [--trials N] [--seed S] [--max-deg D] [--max-mult M] ...
//   imult bench    [--deg D] [--mult M] [--trials N] [--timeout-ms T] [--csv PATH]
//
// Exit codes: 0 success, 1 usage/parse error, 2 math error, 3 internal error
// or verification mismatch.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "imult/examples.hpp"
#include "imult/harness.hpp"
#include "imult/parser.hpp"
#include "imult/report.hpp"

namespace {

using namespace imult;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("IMULT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw usage_error("IMULT_SEED is not a number");
        }
    }
    return 42;
}

int cmd_compute(const std::string& fs, const std::string& gs, const std::string& ps,
                bool trace, bool json) {
    BiPoly f = parse_poly(fs);
    BiPoly g = parse_poly(gs);
    RatPoint P = parse_point(ps);
    IMReport report = intersection_multiplicity(f, g, P);
    if (json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        if (trace) std::cout << render_trace(report);
        else std::cout << render_value(report.value) << "\n";
    }
    return 0;
}

int cmd_examples(bool json) {
    bool all_ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const GoldenExample& ex : golden_examples()) {
        IMReport report = intersection_multiplicity(parse_poly(ex.f), parse_poly(ex.g),
                                                    {Rational(0), Rational(0)});
        const bool ok = !report.value.infinite && report.value.value == ex.expected;
        all_ok = all_ok && ok;
        if (json) {
            arr.push_back({{"name", ex.name},
                           {"f", ex.f},
                           {"g", ex.g},
                           {"expected", ex.expected},
                           {"computed", render_value(report.value)},
                           {"pass", ok}});
        } else {
            std::cout << (ok ? "PASS" : "FAIL") << " " << ex.name << ": expected "
                      << ex.expected << ", computed " << render_value(report.value) << "\n";
            if (!ok)
                std::cout << "  f = " << ex.f << "\n  g = " << ex.g << "\n";
        }
    }
    if (json) std::cout << arr.dump(2) << "\n";
    return all_ok ? 0 : 3;
}

int cmd_verify(const VerifyOptions& opt, bool json) {
    VerifyResult res = run_verify(opt, json ? nullptr : &std::cout);
    if (json) {
        nlohmann::json j{{"trials", res.trials},
                         {"agreements", res.agreements},
                         {"disagreements", res.disagreements},
                         {"oracle_dnf", res.oracle_dnf},
                         {"infinite_skipped", res.infinite_skipped},
                         {"max_depth_seen", res.max_depth_seen},
                         {"depth_bound_ok", res.depth_bound_ok}};
        nlohmann::json props = nlohmann::json::array();
        for (const PropertyStat& p : res.properties)
            props.push_back({{"name", p.name},
                             {"pass", p.pass},
                             {"fail", p.fail},
                             {"first_failure", p.first_failure}});
        j["properties"] = std::move(props);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << res.trials << " trials, " << res.disagreements << " disagreements, "
                  << res.oracle_dnf << " oracle DNFs (skipped), " << res.infinite_skipped
                  << " infinite pairs skipped\n";
        if (!res.first_disagreement.empty())
            std::cout << "first disagreement: " << res.first_disagreement << "\n";
        std::cout << "max blowup depth seen " << res.max_depth_seen << " (bound "
                  << (res.depth_bound_ok ? "held" : "VIOLATED") << ")\n";
        for (const PropertyStat& p : res.properties) {
            std::cout << "property " << p.name << ": " << p.pass << " pass, " << p.fail
                      << " fail";
            if (p.fail > 0) std::cout << " (" << p.first_failure << ")";
            std::cout << "\n";
        }
    }
    return res.ok() ? 0 : 3;
}

int cmd_bench(const BenchOptions& opt, const std::string& csv_path, bool json) {
    BenchResult res = run_bench(opt, json ? nullptr : &std::cout);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw usage_error("cannot write CSV to " + csv_path);
        out << bench_csv(res);
    }
    std::vector<std::string> values;
    for (const BenchTrialRow& r : res.rows) {
        if (!r.blowup_value.empty() &&
            std::find(values.begin(), values.end(), r.blowup_value) == values.end())
            values.push_back(r.blowup_value);
    }
    std::string observed;
    for (std::size_t i = 0; i < values.size(); ++i)
        observed += (i ? "," : "") + values[i];
    if (json) {
        nlohmann::json j{{"deg", opt.deg},
                         {"mult", opt.mult},
                         {"trials", opt.trials},
                         {"observed_values", observed},
                         {"axioms_median_us", res.axioms_median_us},
                         {"axioms_mean_us", res.axioms_mean_us},
                         {"axioms_dnf", res.axioms_dnf},
                         {"blowup_median_us", res.blowup_median_us},
                         {"blowup_mean_us", res.blowup_mean_us},
                         {"blowup_dnf", res.blowup_dnf}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "deg " << opt.deg << "  m " << opt.mult << "  I(f,g) " << observed
                  << "  axioms median " << res.axioms_median_us << "us (dnf "
                  << res.axioms_dnf << ")  blowup median " << res.blowup_median_us
                  << "us (dnf " << res.blowup_dnf << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local intersection multiplicity of plane algebraic curves"};
    app.require_subcommand(1);

    std::string f_expr, g_expr, point = "0,0", csv_path;
    bool trace = false, json = false;

    CLI::App* compute = app.add_subcommand("compute", "intersection multiplicity at a point");
    compute->add_option("--f", f_expr, "first curve")->required();
    compute->add_option("--g", g_expr, "second curve")->required();
    compute->add_option("--point", point, "rational point \"px,py\" (default origin)");
    compute->add_flag("--trace", trace, "print the configuration tree");
    compute->add_flag("--json", json, "JSON output");

    CLI::App* examples = app.add_subcommand("examples", "run the built-in example pairs");
    examples->add_flag("--json", json, "JSON output");

    VerifyOptions vopt;
    vopt.seed = 0;  // 0 = take the default / environment seed below
    CLI::App* verify = app.add_subcommand("verify", "oracle equivalence and property suites");
    verify->add_option("--trials", vopt.trials, "random pair count");
    verify->add_option("--seed", vopt.seed, "base seed (default 42 or IMULT_SEED)");
    verify->add_option("--max-deg", vopt.max_deg, "max curve degree");
    verify->add_option("--max-mult", vopt.max_mult, "max multiplicity at the origin");
    verify->add_option("--timeout-ms", vopt.timeout_ms, "oracle wall-clock timeout");
    verify->add_option("--prop-trials", vopt.prop_trials, "instances per property");
    verify->add_flag("--json", json, "JSON output");

    BenchOptions bopt;
    bopt.seed = 0;
    CLI::App* bench = app.add_subcommand("bench", "time both algorithms on random pairs");
    bench->add_option("--deg", bopt.deg, "curve degree");
    bench->add_option("--mult", bopt.mult, "multiplicity at the origin");
    bench->add_option("--trials", bopt.trials, "trial count");
    bench->add_option("--timeout-ms", bopt.timeout_ms, "per-trial wall-clock timeout");
    bench->add_option("--seed", bopt.seed, "base seed (default 42 or IMULT_SEED)");
    bench->add_option("--csv", csv_path, "write per-trial rows to a CSV file");
    bench->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (*compute) return cmd_compute(f_expr, g_expr, point, trace, json);
        if (*examples) return cmd_examples(json);
        if (*verify) {
            if (vopt.seed == 0) vopt.seed = default_seed();
            return cmd_verify(vopt, json);
        }
        if (*bench) {
            if (bopt.seed == 0) bopt.seed = default_seed();
            return cmd_bench(bopt, csv_path, json);
        }
    } catch (const parse_error& e) {
        std::cerr << "error at offset " << e.offset << ": " << e.what() << "\n";
        return 1;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const math_error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
