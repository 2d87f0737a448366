#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "elastica/curve.hpp"
#include "elastica/euler_chain.hpp"
#include "elastica/flow.hpp"
#include "elastica/io.hpp"
#include "elastica/minimize.hpp"
#include "elastica/ode.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/verify.hpp"

namespace elastica::cli {

namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

struct Params {
    const std::map<std::string, std::string>& kv;

    bool has(const std::string& key) const { return kv.count(key) != 0; }
    double number(const std::string& key) const {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("missing required parameter: " + key);
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size() || !std::isfinite(v))
            throw std::invalid_argument("parameter " + key + " is not a finite number");
        return v;
    }
    double number_or(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }
    long integer(const std::string& key) const {
        const double v = number(key);
        if (v != std::floor(v))
            throw std::invalid_argument("parameter " + key + " must be an integer");
        return static_cast<long>(v);
    }
    long integer_or(const std::string& key, long fallback) const {
        return has(key) ? integer(key) : fallback;
    }
    std::string text_or(const std::string& key, const std::string& fallback) const {
        const auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    }
    void reject_unknown(const std::set<std::string>& allowed) const {
        std::string extras;
        for (const auto& [k, v] : kv)
            if (!allowed.count(k)) extras += (extras.empty() ? "" : ", ") + k;
        if (!extras.empty())
            throw std::invalid_argument("unknown parameters: " + extras);
    }
};

class Emitter {
  public:
    Emitter(const RunConfig& cfg) : cfg_(cfg) {
        const fs::path dir(cfg.output_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        // Probe writability up front.
        const fs::path probe = dir / ".write_probe";
        std::ofstream f(probe, std::ios::binary);
        if (!f) throw std::invalid_argument("output_dir is not writable: " +
                                            cfg.output_dir);
        f.close();
        fs::remove(probe, ec);
    }
    bool wants(const std::string& format) const { return cfg_.formats.count(format); }
    void write(const std::string& name, const std::string& format,
               const std::string& content) const {
        if (!wants(format)) return;
        const fs::path p = fs::path(cfg_.output_dir) / name;
        std::ofstream f(p, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + p.string());
        f << content;
    }

  private:
    const RunConfig& cfg_;
};

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["subcommand"] = cfg.subcommand;
    for (const auto& [k, v] : cfg.params) j["params"][k] = v;
    return j;
}

std::vector<Vec2> profile_svg_points(std::span<const double> kappa, double L) {
    // (s, kappa) polyline for profile rendering.
    std::vector<Vec2> pts(kappa.size());
    for (std::size_t i = 0; i < kappa.size(); ++i)
        pts[i] = {L * static_cast<double>(i) / static_cast<double>(kappa.size()),
                  kappa[i]};
    return pts;
}

int cmd_trace(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"alpha", "beta", "gamma", "a", "x0", "x1", "n"});
    ElasticaParams ep{p.number("alpha"), p.number("beta"), p.number("gamma"),
                      p.number("a")};
    validate_params(ep);
    const long n = p.integer_or("n", 1024);
    if (n < 2 || n > 10000000)
        throw std::invalid_argument("n out of range [2, 1e7]");

    double x0, x1;
    if (p.has("x0") && p.has("x1")) {
        x0 = p.number("x0");
        x1 = p.number("x1");
    } else {
        // Default: the admissible interval bounded by the two turning points
        // around the minimum of |Phi|.
        const std::vector<double> roots = turning_points(ep);
        if (roots.size() < 2)
            throw std::invalid_argument(
                "unbounded admissible domain; pass x0 and x1 explicitly");
        // Pick the adjacent root pair whose midpoint is admissible.
        bool found = false;
        x0 = x1 = 0.0;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            const double mid = 0.5 * (roots[i] + roots[i + 1]);
            const double phi = ep.alpha + mid * (ep.beta + mid * ep.gamma);
            if (std::abs(phi) < std::abs(ep.a) && roots[i + 1] - roots[i] > 1e-12) {
                x0 = roots[i];
                x1 = roots[i + 1];
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument(
                "no admissible interval between turning points; pass x0/x1");
    }

    const ShapeTrace trace = elastica_integrals(ep, x0, x1, static_cast<std::size_t>(n));
    const Emitter out(cfg);
    out.write("trace.csv", "csv", trace_csv(trace, ep));
    std::vector<Vec2> pts(trace.x.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {trace.x[i], trace.y[i]};
    out.write("trace.svg", "svg", render_svg(pts, 640, 640));
    nlohmann::ordered_json j = config_echo(cfg);
    j["total_length"] = trace.s.back();
    const SpeciesLabel label = classify_species(ep);
    j["species"] = to_string(label.tag);
    j["modulus"] = label.modulus;
    out.write("trace.json", "json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_pendulum(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"A", "B", "phi0", "dphi0", "length", "n"});
    const long n = p.integer_or("n", 10000);
    if (n < 64 || n > 10000000) throw std::invalid_argument("n out of range");
    const PendulumSolution sol = solve_static_sine_gordon(
        {p.number("A"), p.number("B")}, {p.number("phi0"), p.number("dphi0")},
        p.number("length"), static_cast<std::size_t>(n));
    const PlanarCurve curve = curve_from_tangent_angles(sol.phi, sol.ds, {0, 0});
    std::vector<double> s(sol.phi.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = sol.ds * static_cast<double>(i);

    const Emitter out(cfg);
    out.write("pendulum.csv", "csv", pendulum_csv(s, sol.phi, sol.dphi, curve.points));
    out.write("pendulum.svg", "svg", render_svg(curve.points, 640, 640));
    nlohmann::ordered_json j = config_echo(cfg);
    j["first_integral"] =
        pendulum_first_integral(sol.params, sol.phi[0], sol.dphi[0]);
    const CrossCheck cc = cross_check_formulations(sol);
    j["curvature_equation"] = {{"a_fit", cc.a_fit},
                               {"residual_norm", cc.residual_norm},
                               {"degenerate", cc.degenerate}};
    out.write("pendulum.json", "json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_smkdv(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"a", "kappa0", "dkappa0", "length", "n"});
    const long n = p.integer_or("n", 10000);
    if (n < 64 || n > 10000000) throw std::invalid_argument("n out of range");
    const SMKdVSolution sol =
        solve_smkdv({p.number("a"), p.number("kappa0"), p.number_or("dkappa0", 0.0)},
                    p.number("length"), static_cast<std::size_t>(n));
    const PlanarCurve curve = reconstruct_curve(sol.profile, 0.0, 0.0, 0.0);
    std::vector<double> s(sol.profile.kappa.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = sol.profile.ds * static_cast<double>(i);

    const Emitter out(cfg);
    out.write("smkdv.csv", "csv",
              smkdv_csv(s, sol.profile.kappa, sol.dkappa, curve.points));
    out.write("smkdv.svg", "svg", render_svg(curve.points, 640, 640));
    nlohmann::ordered_json j = config_echo(cfg);
    j["first_integral"] =
        smkdv_first_integral(sol.a, sol.profile.kappa[0], sol.dkappa[0]);
    out.write("smkdv.json", "json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_flow(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"i", "N", "dt", "steps", "profile", "L", "amplitude",
                      "snapshot-every", "a", "kappa0"});
    const int i = static_cast<int>(p.integer("i"));
    const long N = p.integer("N");
    const long steps = p.integer("steps");
    if (steps < 1 || steps > 100000000) throw std::invalid_argument("steps out of range");
    // Default domain sized so the documented dt = 1e-4 at N = 256 sits at
    // the dispersive stability bound.
    const double L = p.number_or("L", 8.0 * kPi);

    FlowState st;
    st.L = L;
    st.kappa.resize(static_cast<std::size_t>(N));
    const std::string profile = p.text_or("profile", "cos");
    if (profile == "cos") {
        const double amp = p.number_or("amplitude", 1.0);
        for (long j = 0; j < N; ++j)
            st.kappa[j] = amp * std::cos(2.0 * kPi * static_cast<double>(j) /
                                         static_cast<double>(N));
    } else if (profile == "smkdv") {
        const PeriodicOrbit orbit =
            smkdv_periodic_orbit(p.number_or("a", -1.0), p.number_or("kappa0", 1.8),
                                 static_cast<std::size_t>(N));
        st.kappa = orbit.kappa;
        st.L = orbit.period;
    } else {
        throw std::invalid_argument("profile must be cos or smkdv");
    }
    validate_flow_state(st);
    const double dt = p.number_or("dt", stable_dt(st.L, st.kappa.size(), i));

    double m0 = 0.0, e0 = 0.0;
    for (double v : st.kappa) {
        m0 += v;
        e0 += v * v;
    }

    const long every = p.integer_or("snapshot-every", std::max(1L, steps / 16));
    FlowCsvWriter csv;
    csv.append_snapshot(st.t, st.L, st.kappa);
    long done = 0;
    while (done < steps) {
        const long chunk = std::min(every, steps - done);
        st = evolve(std::move(st), i, dt, static_cast<std::size_t>(chunk));
        done += chunk;
        csv.append_snapshot(st.t, st.L, st.kappa);
    }

    double m1 = 0.0, e1 = 0.0;
    for (double v : st.kappa) {
        m1 += v;
        e1 += v * v;
    }
    const double elapsed = dt * static_cast<double>(steps);

    const Emitter out(cfg);
    out.write("flow.csv", "csv", csv.str());
    out.write("flow.svg", "svg",
              render_svg(profile_svg_points(st.kappa, st.L), 640, 320));
    nlohmann::ordered_json j = config_echo(cfg);
    j["dt"] = dt;
    j["t_final"] = st.t;
    j["turning_number_drift"] =
        std::abs(m1 - m0) / static_cast<double>(st.kappa.size());
    const double edrift = std::abs(e1 - e0) / std::max(1e-300, std::abs(e0));
    j["energy_drift"] = edrift;
    j["energy_drift_per_unit_time"] = elapsed > 0 ? edrift / elapsed : 0.0;
    out.write("flow.json", "json", j.dump(2) + "\n");
    return kExitOk;
}

int cmd_minimize(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"x0", "y0", "x1", "y1", "length", "n", "clamp-start",
                      "clamp-end", "closed", "grad-tol", "max-iterations"});
    BoundaryConditions bc;
    bc.closed = p.text_or("closed", "0") == "1";
    bc.total_length = p.number("length");
    bc.start = {p.number_or("x0", 0.0), p.number_or("y0", 0.0)};
    if (!bc.closed) bc.end = {p.number("x1"), p.number("y1")};
    if (p.has("clamp-start")) bc.start_tangent = {true, p.number("clamp-start")};
    if (p.has("clamp-end")) bc.end_tangent = {true, p.number("clamp-end")};
    const long n = p.integer_or("n", 512);
    if (n < 64 || n > 1000000) throw std::invalid_argument("n out of range");

    MinimizeOptions opts;
    opts.grad_tol = p.number_or("grad-tol", 1e-8);
    opts.max_iterations =
        static_cast<std::size_t>(p.integer_or("max-iterations", 100000));
    const MinimizeReport rep =
        minimize_elastica(bc, static_cast<std::size_t>(n), nullptr, opts);
    const Certification cert =
        rep.converged || rep.degenerate ? certify_minimizer(rep) : Certification{};

    const Emitter out(cfg);
    const CurvatureProfile prof = curvature_of(rep.curve);
    std::string csv = "s,x,y,kappa\n";
    for (std::size_t j = 0; j < rep.curve.points.size(); ++j) {
        csv += format_g17(rep.curve.ds * static_cast<double>(j));
        csv += ',';
        csv += format_g17(rep.curve.points[j].x);
        csv += ',';
        csv += format_g17(rep.curve.points[j].y);
        csv += ',';
        csv += format_g17(prof.kappa[j]);
        csv += '\n';
    }
    out.write("minimize.csv", "csv", csv);
    out.write("minimize.svg", "svg",
              render_svg(rep.curve.points, 640, 640, rep.curve.closed));
    out.write("minimize.json", "json", minimize_report_json(rep, cert));

    if (!rep.converged && !rep.degenerate) {
        std::cerr << error_json("numerical",
                                "minimization did not converge: grad_norm = " +
                                    format_g17(rep.grad_norm) + " after " +
                                    std::to_string(rep.iterations) + " iterations");
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"suite"});
    const std::string suite = p.text_or("suite", "all");
    const SuiteReport rep = run_verification_suite(suite);
    const Emitter out(cfg);
    out.write("verify_" + suite + ".json", "json", suite_report_json(rep));
    for (const CheckResult& c : rep.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << " value=" << format_g17(c.value)
                  << " threshold=" << format_g17(c.threshold) << "\n";
    if (!rep.pass) {
        for (const CheckResult& c : rep.checks)
            if (!c.pass)
                std::cerr << "violated invariant: " << c.name << "\n";
        return kExitChecksFailed;
    }
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
    Params p{cfg.params};
    p.reject_unknown({"alpha", "beta", "gamma", "a"});
    const ElasticaParams ep{p.number("alpha"), p.number("beta"),
                            p.number("gamma"), p.number("a")};
    const SpeciesLabel label = classify_species(ep);
    const Emitter out(cfg);
    out.write("classify.json", "json", species_json(label, ep));
    std::cout << to_string(label.tag) << " modulus=" << format_g17(label.modulus)
              << "\n";
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        if (config.subcommand == "trace") return cmd_trace(config);
        if (config.subcommand == "pendulum") return cmd_pendulum(config);
        if (config.subcommand == "smkdv") return cmd_smkdv(config);
        if (config.subcommand == "flow") return cmd_flow(config);
        if (config.subcommand == "minimize") return cmd_minimize(config);
        if (config.subcommand == "verify") return cmd_verify(config);
        if (config.subcommand == "classify") return cmd_classify(config);
        throw std::invalid_argument("unknown subcommand: " + config.subcommand);
    } catch (const numerical_error& e) {
        const std::string rec = error_json("numerical", e.what());
        std::cerr << rec;
        std::ofstream f(std::filesystem::path(config.output_dir) / "error.json",
                        std::ios::binary);
        if (f) f << rec;
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        const std::string rec = error_json("validation", e.what());
        std::cerr << rec;
        std::ofstream f(std::filesystem::path(config.output_dir) / "error.json",
                        std::ios::binary);
        if (f) f << rec;
        return kExitValidation;
    }
}

}  // namespace elastica::cli
