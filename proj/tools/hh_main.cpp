#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hh/campaign.hpp"
#include "hh/json_io.hpp"

namespace {

using nlohmann::json;

// Descriptor arguments are inline JSON, or @path to a JSON file.
json load_descriptor(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw hh::InvalidArgument("cannot open file " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

std::uint64_t env_or(std::uint64_t fallback) {
    if (const char* env = std::getenv("HH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw hh::InvalidArgument("HH_SEED is not an integer");
        }
    }
    return fallback;
}

int status_exit_code(hh::BoundStatus status) {
    switch (status) {
        case hh::BoundStatus::Holds: return 0;
        case hh::BoundStatus::Violated: return 2;
        case hh::BoundStatus::Inconclusive: return 3;
    }
    return 1;
}

struct BoundsArgs {
    std::string simplex;
    std::string function;
    std::string family;
    std::string functional = "interior";
    std::int64_t samples = 100000;
    std::optional<std::uint64_t> seed;
};

int run_bounds(const BoundsArgs& args) {
    const hh::Simplex S = hh::simplex_from_json(load_descriptor(args.simplex));
    const hh::FunctionSpec f = hh::function_from_json(load_descriptor(args.function), S.dim());
    const hh::BoundFamily family = hh::family_from_string(args.family);
    if (!hh::family_applicable(family, f))
        throw hh::InvalidArgument("family \"" + args.family +
                                  "\" needs a strong-convexity modulus; function class is " +
                                  std::string(hh::class_name(f.class_tag)));

    hh::IntegratorConfig cfg;
    cfg.mc_samples = args.samples;
    cfg.seed = args.seed ? *args.seed : env_or(1);

    hh::BoundReport report;
    switch (family) {
        case hh::BoundFamily::Classical: report = hh::classical_hh(f, S, cfg); break;
        case hh::BoundFamily::Wright: report = hh::wright_hh(f, S, cfg); break;
        case hh::BoundFamily::StronglyConvex: report = hh::strongly_convex_hh(f, S, cfg); break;
        case hh::BoundFamily::StronglyWright: report = hh::strongly_wright_hh(f, S, cfg); break;
        case hh::BoundFamily::Operator: {
            hh::PositiveLinearFunctional T =
                args.functional == "barycenter"       ? hh::make_barycenter_functional(S)
                : args.functional == "vertex_average" ? hh::make_vertex_average_functional(S)
                : args.functional == "interior"       ? hh::make_interior_rule_functional(S)
                                                      : throw hh::InvalidArgument(
                                                            "unknown functional \"" +
                                                            args.functional + "\"");
            report = hh::operator_hh(f, S, T);
            break;
        }
    }

    std::cout << hh::report_to_json(report).dump() << "\n";
    std::cerr << args.family << " chain on " << f.name << ": " << report.lower
              << " <= " << report.middle.value << " <= " << report.upper << "  ["
              << hh::status_name(report.status) << "]\n";
    return status_exit_code(report.status);
}

struct IntegrateArgs {
    std::string simplex;
    std::string function;
    std::string method = "exact";
    std::int64_t samples = 100000;
    std::optional<std::uint64_t> seed;
};

int run_integrate(const IntegrateArgs& args) {
    const hh::Simplex S = hh::simplex_from_json(load_descriptor(args.simplex));
    const hh::FunctionSpec f = hh::function_from_json(load_descriptor(args.function), S.dim());

    hh::IntegralEstimate est;
    if (args.method == "exact") {
        if (!f.polynomial_form)
            throw hh::InvalidArgument("exact integration needs a polynomial function class");
        est = hh::integrate_polynomial(S, *f.polynomial_form);
    } else if (args.method == "mc") {
        est = hh::integrate_mc(S, f.evaluator, args.samples, args.seed ? *args.seed : env_or(1));
    } else {
        throw hh::InvalidArgument("method must be \"exact\" or \"mc\"");
    }

    std::cout << hh::estimate_to_json(est).dump() << "\n";
    std::cerr << "integral of " << f.name << " = " << est.value;
    if (est.kind == hh::EstimateKind::MonteCarlo) std::cerr << " +- " << est.std_error;
    std::cerr << "\n";
    return 0;
}

struct VerifyArgs {
    std::string config_path;
    std::vector<std::string> families;
    std::vector<int> dimensions;
    std::optional<int> simplices;
    std::optional<std::int64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    std::optional<std::string> out;
};

int run_verify(const VerifyArgs& args) {
    hh::CampaignConfig config;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw hh::InvalidArgument("cannot open config " + args.config_path);
        config = hh::campaign_config_from_json(json::parse(in));
    }
    if (!args.families.empty()) {
        config.families.clear();
        for (const std::string& name : args.families)
            config.families.push_back(hh::family_from_string(name));
    }
    if (!args.dimensions.empty()) config.dimensions = args.dimensions;
    if (args.simplices) config.simplices_per_dim = *args.simplices;
    if (args.samples) config.mc_samples = *args.samples;
    config.seed = args.seed ? *args.seed : env_or(config.seed);
    if (args.format) config.format = *args.format;
    if (args.out) config.output_path = *args.out;
    hh::validate(config);

    const hh::CampaignResult result = hh::run_campaign(config);

    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw hh::InvalidArgument("cannot write " + config.output_path);
    if (config.format == "csv")
        out << hh::campaign_report_csv(result);
    else
        out << hh::campaign_report_json(config, result).dump(2) << "\n";
    out.close();
    if (!out) throw hh::InvalidArgument("failed writing " + config.output_path);

    std::cout << hh::aggregate_json(result.summary).dump() << "\n";
    std::cerr << "campaign: " << result.summary.total << " cases, " << result.summary.holds
              << " hold, " << result.summary.violated << " violated, "
              << result.summary.inconclusive << " inconclusive; report written to "
              << config.output_path << "\n";
    return result.summary.positive_violations == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite-Hadamard bounds on simplices: compute, verify, integrate"};
    app.require_subcommand(1);

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "compute one bound chain and its verdict");
    bounds->add_option("--simplex", bounds_args.simplex, "simplex JSON or @file")->required();
    bounds->add_option("--function", bounds_args.function, "function JSON or @file")->required();
    bounds
        ->add_option("--family", bounds_args.family,
                     "classical | wright | strongly_convex | strongly_wright | operator")
        ->required();
    bounds->add_option("--functional", bounds_args.functional,
                       "operator family rule: barycenter | vertex_average | interior");
    bounds->add_option("--samples", bounds_args.samples, "Monte Carlo sample count");
    bounds->add_option("--seed", bounds_args.seed, "RNG seed (fallback: HH_SEED)");

    IntegrateArgs integrate_args;
    CLI::App* integrate = app.add_subcommand("integrate", "integrate a function over a simplex");
    integrate->add_option("--simplex", integrate_args.simplex, "simplex JSON or @file")->required();
    integrate->add_option("--function", integrate_args.function, "function JSON or @file")
        ->required();
    integrate->add_option("--method", integrate_args.method, "exact | mc");
    integrate->add_option("--samples", integrate_args.samples, "Monte Carlo sample count");
    integrate->add_option("--seed", integrate_args.seed, "RNG seed (fallback: HH_SEED)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--config", verify_args.config_path, "campaign config JSON file");
    verify->add_option("--families", verify_args.families, "subset of bound families")
        ->delimiter(',');
    verify->add_option("--dims", verify_args.dimensions, "dimensions to sweep")->delimiter(',');
    verify->add_option("--simplices", verify_args.simplices, "random simplices per dimension");
    verify->add_option("--samples", verify_args.samples, "Monte Carlo sample count");
    verify->add_option("--seed", verify_args.seed, "campaign seed (fallback: HH_SEED)");
    verify->add_option("--format", verify_args.format, "json | csv");
    verify->add_option("--out", verify_args.out, "report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (bounds->parsed()) return run_bounds(bounds_args);
        if (integrate->parsed()) return run_integrate(integrate_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const hh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
