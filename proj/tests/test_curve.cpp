#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "elastica/curve.hpp"

using namespace elastica;

namespace {

constexpr double kPi = std::numbers::pi;

PlanarCurve unit_circle(std::size_t n) {
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        pts[i] = {std::cos(t), std::sin(t)};
    }
    return make_curve(std::move(pts), true);
}

PlanarCurve straight_segment(std::size_t n, double angle) {
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = {0.01 * i * std::cos(angle), 0.01 * i * std::sin(angle)};
    return make_curve(std::move(pts), false);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("curvature of the unit circle") {
    const PlanarCurve c = unit_circle(1024);
    const CurvatureProfile k = curvature_of(c);
    double worst = 0.0;
    for (double v : k.kappa) worst = std::max(worst, std::abs(v - 1.0));
    CHECK(worst < 1e-3);
}

TEST_CASE("curvature of a straight segment is zero") {
    const CurvatureProfile k = curvature_of(straight_segment(64, 0.37));
    CHECK(max_abs(k.kappa) < 1e-12);
}

TEST_CASE("degenerate segments are rejected") {
    std::vector<Vec2> pts(16, Vec2{1.0, 2.0});
    CHECK_THROWS_AS((void)make_curve(pts, false), std::invalid_argument);
}

TEST_CASE("curvature round-trip for kappa = sin s") {
    const std::size_t n = 2048;
    CurvatureProfile prof;
    prof.ds = 2.0 * kPi / static_cast<double>(n - 1);
    prof.kappa.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.kappa[i] = std::sin(i * prof.ds);
    const PlanarCurve c = reconstruct_curve(prof, 0.3, -0.2, 0.9);
    const CurvatureProfile back = curvature_of(c);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i)
        worst = std::max(worst, std::abs(back.kappa[i] - prof.kappa[i]));
    CHECK(worst < 5.0 * prof.ds * prof.ds);
}

TEST_CASE("reconstruction of a circle from constant curvature") {
    const double R = 1.7;
    const std::size_t n = 512;
    CurvatureProfile prof;
    prof.ds = 2.0 * kPi * R / static_cast<double>(n);
    prof.periodic = true;
    prof.kappa.assign(n, 1.0 / R);
    const double x0 = 0.4, y0 = -1.1, phi0 = 0.7;
    const PlanarCurve c = reconstruct_curve(prof, x0, y0, phi0);
    CHECK(c.closed);
    // Center sits at distance R along the left normal of the start pose.
    const Vec2 center{x0 - R * std::sin(phi0), y0 + R * std::cos(phi0)};
    double worst = 0.0;
    for (const Vec2& p : c.points)
        worst = std::max(worst, std::abs(dist(p, center) - R));
    CHECK(worst < 10.0 * prof.ds * prof.ds);
}

TEST_CASE("reconstruction of a straight line") {
    const std::size_t n = 256;
    CurvatureProfile prof;
    prof.ds = 0.01;
    prof.kappa.assign(n, 0.0);
    const PlanarCurve c = reconstruct_curve(prof, 1.0, 2.0, 0.6);
    const double L = prof.ds * static_cast<double>(n - 1);
    CHECK(dist(c.points.back(),
               Vec2{1.0 + L * std::cos(0.6), 2.0 + L * std::sin(0.6)}) < 1e-12);
}

TEST_CASE("solitary curvature profile: equation residual and round-trip") {
    // kappa = 2 sqrt(-a) sech(sqrt(-a) s) solves kappa'' + kappa^3/2 + a kappa = 0.
    const double a = -1.0;
    double residual = 0.0;
    for (double s = -10.0; s <= 10.0; s += 0.05) {
        const double sech = 1.0 / std::cosh(s);
        const double tanh = std::tanh(s);
        const double kappa = 2.0 * sech;
        const double kpp = 2.0 * sech * tanh * tanh - 2.0 * sech * sech * sech;
        residual = std::max(residual,
                            std::abs(kpp + 0.5 * kappa * kappa * kappa + a * kappa));
    }
    CHECK(residual < 1e-10);

    const std::size_t n = 16384;
    CurvatureProfile prof;
    prof.ds = 20.0 / static_cast<double>(n - 1);
    prof.kappa.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        prof.kappa[i] = 2.0 / std::cosh(-10.0 + i * prof.ds);
    const PlanarCurve c = reconstruct_curve(prof, 0.0, 0.0, 0.0);
    const CurvatureProfile back = curvature_of(c);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i)
        worst = std::max(worst, std::abs(back.kappa[i] - prof.kappa[i]));
    CHECK(worst < 5.0 * prof.ds * prof.ds);
}

TEST_CASE("bending energy of a circle") {
    const double R = 2.3;
    const std::size_t n = 4096;
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * i / static_cast<double>(n);
        pts[i] = {R * std::cos(t), R * std::sin(t)};
    }
    const PlanarCurve c = make_curve(std::move(pts), true);
    const double want = 2.0 * kPi / R;
    CHECK(std::abs(bending_energy(c) - want) / want < 1e-6);
}

TEST_CASE("bending energy of a straight segment is zero") {
    CHECK(bending_energy(straight_segment(128, -0.2)) < 1e-20);
}

TEST_CASE("bending energy of constant curvature on an open curve") {
    const double c0 = 0.8, L = 2.0;
    const std::size_t n = 8192;
    CurvatureProfile prof;
    prof.ds = L / static_cast<double>(n - 1);
    prof.kappa.assign(n, c0);
    const PlanarCurve c = reconstruct_curve(prof, 0.0, 0.0, 0.0);
    const double want = c0 * c0 * L;
    CHECK(std::abs(bending_energy(c) - want) / want < 1e-8);
}

TEST_CASE("bending energy is invariant under rigid motions") {
    const std::size_t n = 2048;
    CurvatureProfile prof;
    prof.ds = 2.0 * kPi / static_cast<double>(n - 1);
    prof.kappa.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.kappa[i] = std::sin(i * prof.ds);
    const PlanarCurve c = reconstruct_curve(prof, 0.0, 0.0, 0.0);
    const double e0 = bending_energy(c);
    PlanarCurve moved = c;
    for (Vec2& p : moved.points) p = rotate(p, 1.234) + Vec2{5.0, -7.0};
    CHECK(std::abs(bending_energy(moved) - e0) / e0 < 1e-12);
}

TEST_CASE("reconstruction carries an exactly unit tangent") {
    const std::size_t n = 4096;
    CurvatureProfile prof;
    prof.ds = 0.0025;
    prof.kappa.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.kappa[i] = std::cos(3.0 * i * prof.ds);
    const ReconstructedCurve rc = reconstruct_curve_detailed(prof, 0, 0, 0.1);
    double worst = 0.0;
    for (double a : rc.phi) {
        const double t = std::cos(a) * std::cos(a) + std::sin(a) * std::sin(a);
        worst = std::max(worst, std::abs(t - 1.0));
    }
    CHECK(worst < 1e-12);
    validate_curve(rc.curve);  // chord uniformity holds as well
}

TEST_CASE("resample: square corners preserve the perimeter") {
    const std::vector<Vec2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
    const PlanarCurve c = resample_arclength(square, 400);
    CHECK(c.closed);
    CHECK(std::abs(c.total_length() - 4.0) < 1e-6 * 4.0);
}

TEST_CASE("resample: already-uniform circle samples are unchanged") {
    const std::size_t n = 256;
    std::vector<Vec2> pts(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = 2.0 * kPi * i / static_cast<double>(n);
        pts[i] = {std::cos(t), std::sin(t)};
    }
    const PlanarCurve c = resample_arclength(pts, n);
    REQUIRE(c.points.size() == n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, dist(c.points[i], pts[i]));
    CHECK(worst < 1e-9);
}

TEST_CASE("resample: equal segment lengths on a random polyline") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> turn(-0.08, 0.08);
    std::vector<Vec2> poly{{0, 0}};
    double ang = 0.0;
    for (int i = 0; i < 40; ++i) {
        ang += turn(rng);
        poly.push_back(poly.back() + Vec2{std::cos(ang), std::sin(ang)});
    }
    const PlanarCurve c = resample_arclength(poly, 1000);
    double dev = 0.0;
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        dev = std::max(dev, std::abs(dist(c.points[i + 1], c.points[i]) - c.ds) / c.ds);
    CHECK(dev < 1e-6);
}

TEST_CASE("resample preserves the length of smooth curves") {
    const std::size_t n = 4096;
    std::vector<Vec2> pts(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = 2.0 * kPi * i / static_cast<double>(n);
        pts[i] = {std::cos(t), std::sin(t)};
    }
    const double L_in = 2.0 * static_cast<double>(n) * std::sin(kPi / n);
    // Output resolution must keep the chord sagitta within the tolerance:
    // the relative shortening per chord is kappa^2 c^2 / 24.
    const PlanarCurve c = resample_arclength(pts, 2048);
    CHECK(std::abs(c.total_length() - L_in) < 1e-6 * L_in);
}

TEST_CASE("resample rejects duplicate consecutive points") {
    const std::vector<Vec2> bad{{0, 0}, {1, 0}, {1, 0}, {2, 1}};
    CHECK_THROWS_AS((void)resample_arclength(bad, 64), std::invalid_argument);
}

TEST_CASE("procrustes distance recovers rigid motions") {
    const PlanarCurve c = unit_circle(64);
    std::vector<Vec2> moved(c.points);
    for (Vec2& p : moved) p = rotate(p, 0.8) + Vec2{2.0, 3.0};
    CHECK(procrustes_distance(moved, c.points) < 1e-12);
}
