#pragma once
// Deterministic serialization: CSV (RFC-4180-style, LF endings, 17
// significant digits), SVG 1.1 shape rendering (single path per curve), and
// JSON reports. Identical inputs produce byte-identical output.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/minimize.hpp"
#include "elastica/quadrature.hpp"

namespace elastica {

// "%.17g" formatting, enough to round-trip any double.
std::string format_g17(double v);

// Rows: s,x,y,kappa (kappa from the parameter set's linear relation).
std::string trace_csv(const ShapeTrace& trace, const ElasticaParams& params);

// Rows: s,phi,dphi,x,y.
std::string pendulum_csv(std::span<const double> s, std::span<const double> phi,
                         std::span<const double> dphi, std::span<const Vec2> xy);

// Rows: s,kappa,dkappa,x,y.
std::string smkdv_csv(std::span<const double> s, std::span<const double> kappa,
                      std::span<const double> dkappa, std::span<const Vec2> xy);

// Incremental flow snapshot stream, rows t,s,kappa.
class FlowCsvWriter {
  public:
    FlowCsvWriter();
    void append_snapshot(double t, double L, std::span<const double> kappa);
    const std::string& str() const { return buf_; }

  private:
    std::string buf_;
};

// SVG document with a single polyline path, viewBox fit with a 5% margin and
// equal x/y scaling. A degenerate bounding box falls back to a unit box and
// embeds a warning comment. canonical_orientation rotates the shape so its
// principal axis is horizontal before rendering.
std::string render_svg(std::span<const Vec2> points, int width, int height,
                       bool closed = false, bool canonical_orientation = false);

// JSON reports.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};
struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
};
std::string suite_report_json(const SuiteReport& report);
std::string minimize_report_json(const MinimizeReport& report,
                                 const Certification& cert);
std::string species_json(const SpeciesLabel& label, const ElasticaParams& p);
std::string error_json(const std::string& type, const std::string& message);

}  // namespace elastica
