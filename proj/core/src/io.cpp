#include "elastica/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace elastica {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string svg_num(double v) { return fmt("%.8g", v); }

}  // namespace

std::string format_g17(double v) { return fmt("%.17g", v); }

std::string trace_csv(const ShapeTrace& trace, const ElasticaParams& params) {
    std::string out = "s,x,y,kappa\n";
    for (std::size_t i = 0; i < trace.s.size(); ++i) {
        out += format_g17(trace.s[i]);
        out += ',';
        out += format_g17(trace.x[i]);
        out += ',';
        out += format_g17(trace.y[i]);
        out += ',';
        out += format_g17(trace_curvature(params, trace.x[i]));
        out += '\n';
    }
    return out;
}

std::string pendulum_csv(std::span<const double> s, std::span<const double> phi,
                         std::span<const double> dphi, std::span<const Vec2> xy) {
    std::string out = "s,phi,dphi,x,y\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += format_g17(s[i]);
        out += ',';
        out += format_g17(phi[i]);
        out += ',';
        out += format_g17(dphi[i]);
        out += ',';
        out += format_g17(xy[i].x);
        out += ',';
        out += format_g17(xy[i].y);
        out += '\n';
    }
    return out;
}

std::string smkdv_csv(std::span<const double> s, std::span<const double> kappa,
                      std::span<const double> dkappa, std::span<const Vec2> xy) {
    std::string out = "s,kappa,dkappa,x,y\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += format_g17(s[i]);
        out += ',';
        out += format_g17(kappa[i]);
        out += ',';
        out += format_g17(dkappa[i]);
        out += ',';
        out += format_g17(xy[i].x);
        out += ',';
        out += format_g17(xy[i].y);
        out += '\n';
    }
    return out;
}

FlowCsvWriter::FlowCsvWriter() : buf_("t,s,kappa\n") {}

void FlowCsvWriter::append_snapshot(double t, double L,
                                    std::span<const double> kappa) {
    const std::size_t n = kappa.size();
    for (std::size_t i = 0; i < n; ++i) {
        buf_ += format_g17(t);
        buf_ += ',';
        buf_ += format_g17(L * static_cast<double>(i) / static_cast<double>(n));
        buf_ += ',';
        buf_ += format_g17(kappa[i]);
        buf_ += '\n';
    }
}

std::string render_svg(std::span<const Vec2> points, int width, int height,
                       bool closed, bool canonical_orientation) {
    if (points.size() < 2)
        throw std::invalid_argument("render_svg: needs at least 2 points");
    if (width < 8 || height < 8)
        throw std::invalid_argument("render_svg: canvas too small");

    std::vector<Vec2> pts(points.begin(), points.end());
    if (canonical_orientation) {
        // Principal axis via the covariance of the point cloud.
        Vec2 c{0, 0};
        for (const Vec2& p : pts) c = c + p;
        c = (1.0 / static_cast<double>(pts.size())) * c;
        double sxx = 0, sxy = 0, syy = 0;
        for (const Vec2& p : pts) {
            const Vec2 d = p - c;
            sxx += d.x * d.x;
            sxy += d.x * d.y;
            syy += d.y * d.y;
        }
        const double angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
        for (Vec2& p : pts) p = rotate(p - c, -angle) + c;
    }

    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Vec2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double scale_hint = std::max({std::abs(xmin), std::abs(xmax),
                                        std::abs(ymin), std::abs(ymax), 1.0});
    bool degenerate = false;
    if (xmax - xmin < 1e-12 * scale_hint && ymax - ymin < 1e-12 * scale_hint) {
        degenerate = true;
        const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
        xmin = cx - 0.5;
        xmax = cx + 0.5;
        ymin = cy - 0.5;
        ymax = cy + 0.5;
    } else {
        // Pad a zero-extent dimension so the aspect mapping stays finite.
        if (xmax - xmin < 1e-12 * scale_hint) {
            const double half = 0.5 * (ymax - ymin) * height / width;
            xmin -= half;
            xmax += half;
        }
        if (ymax - ymin < 1e-12 * scale_hint) {
            const double half = 0.5 * (xmax - xmin) * width / height;
            ymin -= half;
            ymax += half;
        }
    }

    const double bw = xmax - xmin, bh = ymax - ymin;
    const double s = std::min(0.9 * width / bw, 0.9 * height / bh);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    auto map = [&](Vec2 p) -> Vec2 {
        return {0.5 * width + (p.x - cx) * s, 0.5 * height - (p.y - cy) * s};
    };

    std::string path;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 q = map(pts[i]);
        path += (i == 0 ? "M " : " L ");
        path += svg_num(q.x);
        path += ' ';
        path += svg_num(q.y);
    }
    if (closed) path += " Z";

    std::string doc = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    doc += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    if (degenerate)
        doc += "<!-- warning: degenerate bounding box, unit box fallback -->\n";
    doc += "<path d=\"" + path +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n</svg>\n";
    return doc;
}

namespace {

nlohmann::ordered_json check_to_json(const CheckResult& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["threshold"] = c.threshold;
    j["pass"] = c.pass;
    return j;
}

}  // namespace

std::string suite_report_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) j["checks"].push_back(check_to_json(c));
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string minimize_report_json(const MinimizeReport& report,
                                 const Certification& cert) {
    nlohmann::ordered_json j;
    j["converged"] = report.converged;
    j["degenerate"] = report.degenerate;
    j["iterations"] = report.iterations;
    j["energy"] = report.energy;
    j["grad_norm"] = report.grad_norm;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    j["lambda_x"] = report.lambda_x;
    j["lambda_y"] = report.lambda_y;
    j["el_residual_norm"] = report.el_residual_norm;
    j["noether_deviation"] = report.noether_deviation;
    j["certification"] = {{"noether_deviation", cert.noether_deviation},
                          {"smkdv_residual", cert.smkdv_residual},
                          {"a_fit", cert.a_fit},
                          {"pass_noether", cert.pass_noether},
                          {"pass_smkdv", cert.pass_smkdv}};
    j["n_points"] = report.curve.points.size();
    j["ds"] = report.curve.ds;
    return j.dump(2) + "\n";
}

std::string species_json(const SpeciesLabel& label, const ElasticaParams& p) {
    nlohmann::ordered_json j;
    j["tag"] = to_string(label.tag);
    j["modulus"] = label.modulus;
    j["params"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma},
                   {"a", p.a}};
    return j.dump(2) + "\n";
}

std::string error_json(const std::string& type, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = {{"type", type}, {"message", message}};
    return j.dump(2) + "\n";
}

}  // namespace elastica
