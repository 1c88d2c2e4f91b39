#include "wcurve/error.hpp"
#include "wcurve/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace wcurve;

namespace {

int emit(const Report& rep, bool as_json) {
    if (as_json)
        std::cout << rep.json.dump(2) << "\n";
    else
        std::cout << rep.text;
    return rep.ok ? 0 : 1;
}

int input_error(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass curves: semigroups, trace elements, differentials"};
    app.require_subcommand(1);

    bool as_json = false;

    auto* sg = app.add_subcommand("semigroup", "numerical semigroup tables");
    std::vector<i64> gens;
    std::optional<i64> dh;
    sg->add_option("generators", gens, "generators")->required();
    sg->add_option("--dh", dh, "trace degree (default: minimal valid)");
    sg->add_flag("--json", as_json, "machine-readable output");

    auto* cv = app.add_subcommand("curve", "run the pipeline on a curve-spec file");
    std::string spec_path, action;
    std::optional<std::size_t> order;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<i64> cdh;
    cv->add_option("spec", spec_path, "curve-spec file (JSON)")->required();
    cv->add_option("action", action, "check | trace | differentials | expand | verify")
        ->required()
        ->check(CLI::IsMember({"check", "trace", "differentials", "expand", "verify"}));
    cv->add_option("--order", order, "series precision");
    cv->add_option("--tol", tol, "numerical tolerance");
    cv->add_option("--seed", seed, "random seed");
    cv->add_option("--dh", cdh, "force the trace degree");
    cv->add_flag("--json", as_json, "machine-readable output");

    auto* fx = app.add_subcommand("fixtures", "built-in example curves");
    std::string fx_action, fx_name;
    fx->add_option("action", fx_action, "list | emit")->required()->check(CLI::IsMember({"list", "emit"}));
    fx->add_option("name", fx_name, "fixture name (for emit)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sg->parsed()) {
        try {
            return emit(semigroup_report(gens, dh), as_json);
        } catch (const std::exception& e) {
            return input_error(e);
        }
    }

    if (fx->parsed()) {
        try {
            if (fx_action == "list") {
                for (const auto& n : fixture_names()) {
                    auto s = fixture_spec(n);
                    std::cout << n << "  <";
                    for (std::size_t i = 0; i < s.generators.size(); ++i) std::cout << (i ? "," : "") << s.generators[i];
                    std::cout << ">\n";
                }
                return 0;
            }
            if (fx_name.empty()) throw Error("UnknownFixture", "emit needs a fixture name");
            std::cout << emit_spec(fixture_spec(fx_name));
            return 0;
        } catch (const std::exception& e) {
            return input_error(e);
        }
    }

    CurveSpec spec;
    std::optional<CurveAlgebra> C;
    try {
        spec = load_spec(spec_path);
        if (order) spec.options.series_order = *order;
        if (tol) spec.options.tolerance = *tol;
        if (seed) spec.options.seed = *seed;
        if (cdh) spec.options.dh_override = *cdh;
        C = build_curve(spec);
    } catch (const Error& e) {
        if (action == "check" && e.kind() == "TableInvalid") {
            if (as_json)
                std::cout << nlohmann::json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
            else
                std::cout << "table invalid: " << e.what() << "\n";
            return 1;
        }
        return input_error(e);
    } catch (const std::exception& e) {
        return input_error(e);
    }

    try {
        if (action == "check") return emit(check_report(*C), as_json);
        TraceKit K = annihilator_solve(*C, spec.options.dh_override);
        if (action == "trace") return emit(trace_report(*C, K), as_json);
        if (action == "differentials") return emit(differentials_report(*C, K), as_json);
        if (action == "expand") {
            TraceKit K2 = K;
            K2.yhat = yhat_family(*C, K, YhatMode::Truncated);
            return emit(expand_report(*C, K2, expand_at_infinity(*C, K2, spec.options.series_order.value_or(0))), as_json);
        }
        return emit(verify_report(*C, K, spec.options), as_json);
    } catch (const Error& e) {
        if (e.kind() == "InvalidTraceDegree") return input_error(e);
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
