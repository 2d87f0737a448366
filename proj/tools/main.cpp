// elastica-kit: generate elastica traces, run the classical solvers and
// curvature flows, minimize bending energy, and verify the library's
// invariant suites from the command line.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

using elastica::cli::RunConfig;

// Registers --key flags that land in the flat param map as strings.
void add_params(CLI::App* cmd, RunConfig* cfg,
                const std::vector<std::string>& keys) {
    for (const std::string& key : keys) {
        cmd->add_option_function<std::string>(
            "--" + key,
            [cfg, key](const std::string& v) { cfg->params[key] = v; });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elastica-kit: Euler elastica quadrature, solvers, flows"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string formats = "csv,svg,json";
    app.add_option("-o,--output-dir", cfg.output_dir, "Output directory");
    app.add_option("--formats", formats, "Comma-separated subset of csv,svg,json");

    CLI::App* trace = app.add_subcommand("trace", "Elastica shape integrals");
    add_params(trace, &cfg, {"alpha", "beta", "gamma", "a", "x0", "x1", "n"});
    CLI::App* pendulum =
        app.add_subcommand("pendulum", "Static sine-Gordon (tangential angle)");
    add_params(pendulum, &cfg, {"A", "B", "phi0", "dphi0", "length", "n"});
    CLI::App* smkdv = app.add_subcommand("smkdv", "Static modified KdV (curvature)");
    add_params(smkdv, &cfg, {"a", "kappa0", "dkappa0", "length", "n"});
    CLI::App* flow = app.add_subcommand("flow", "Curvature flow of the hierarchy");
    add_params(flow, &cfg,
               {"i", "N", "dt", "steps", "profile", "L", "amplitude",
                "snapshot-every", "a", "kappa0"});
    CLI::App* minimize = app.add_subcommand("minimize", "Constrained bending-energy minimization");
    add_params(minimize, &cfg,
               {"x0", "y0", "x1", "y1", "length", "n", "clamp-start", "clamp-end",
                "grad-tol", "max-iterations"});
    minimize->add_flag_function("--closed", [&cfg](std::int64_t) {
        cfg.params["closed"] = "1";
    });
    CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
    add_params(verify, &cfg, {"suite"});
    CLI::App* classify = app.add_subcommand("classify", "Species of a parameter set");
    add_params(classify, &cfg, {"alpha", "beta", "gamma", "a"});

    for (CLI::App* sub : {trace, pendulum, smkdv, flow, minimize, verify, classify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "{\"error\": {\"type\": \"validation\", \"message\": \""
                  << e.what() << "\"}}\n";
        return elastica::cli::kExitValidation;
    }

    for (CLI::App* sub : {trace, pendulum, smkdv, flow, minimize, verify, classify})
        if (sub->parsed()) cfg.subcommand = sub->get_name();

    cfg.formats.clear();
    std::string token;
    for (char c : formats + ",") {
        if (c == ',') {
            if (!token.empty()) cfg.formats.insert(token);
            token.clear();
        } else {
            token += c;
        }
    }
    for (const std::string& f : cfg.formats) {
        if (f != "csv" && f != "svg" && f != "json") {
            std::cerr << "{\"error\": {\"type\": \"validation\", \"message\": "
                         "\"unknown format: "
                      << f << "\"}}\n";
            return elastica::cli::kExitValidation;
        }
    }

    return elastica::cli::run(cfg);
}
