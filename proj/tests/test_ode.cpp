#include <doctest.h>

#include <stdexcept>
#include <algorithm>

#include <cmath>
#include <numbers>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/ode.hpp"
#include "elastica/quadrature.hpp"

using namespace elastica;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("force-free pendulum gives a circular arc") {
    const double c = 0.8;
    const PendulumSolution sol =
        solve_static_sine_gordon({0.0, 0.0}, {0.2, c}, 5.0, 1000);
    for (std::size_t i = 0; i < sol.phi.size(); ++i)
        CHECK(sol.phi[i] == doctest::Approx(0.2 + c * i * sol.ds).epsilon(1e-13));
    const PlanarCurve arc = curve_from_tangent_angles(sol.phi, sol.ds, {0, 0});
    const CurvatureProfile k = curvature_of(arc);
    for (std::size_t i = 2; i + 2 < k.kappa.size(); ++i)
        CHECK(std::abs(k.kappa[i] - c) < 1e-5);
}

TEST_CASE("small-amplitude pendulum matches the linearization") {
    const PendulumSolution sol =
        solve_static_sine_gordon({0.0, 1.0}, {1e-3, 0.0}, 2.0 * kPi, 10000);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.phi.size(); ++i)
        worst = std::max(worst, std::abs(sol.phi[i] - 1e-3 * std::cos(i * sol.ds)));
    CHECK(worst < 1e-8);
}

TEST_CASE("pendulum first integral is conserved") {
    const PendulumSolution sol =
        solve_static_sine_gordon({0.3, 1.0}, {0.2, 0.5}, 10.0, 10000);
    const double H0 = pendulum_first_integral(sol.params, sol.phi[0], sol.dphi[0]);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.phi.size(); ++i)
        worst = std::max(
            worst, std::abs(pendulum_first_integral(sol.params, sol.phi[i],
                                                    sol.dphi[i]) -
                            H0));
    CHECK(worst / std::max(1.0, std::abs(H0)) < 1e-8);
}

TEST_CASE("constant curvature solves the curvature equation") {
    const double k0 = 1.4;
    const SMKdVSolution sol = solve_smkdv({-0.5 * k0 * k0, k0, 0.0}, 10.0, 200);
    for (double v : sol.profile.kappa) CHECK(v == doctest::Approx(k0).epsilon(1e-14));
}

TEST_CASE("solitary solution: kappa = 2 sech s for a = -1") {
    const SMKdVSolution sol = solve_smkdv({-1.0, 2.0, 0.0}, 10.0, 10000);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.profile.kappa.size(); ++i) {
        const double s = i * sol.profile.ds;
        worst = std::max(worst, std::abs(sol.profile.kappa[i] - 2.0 / std::cosh(s)));
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("small-data curvature equation matches the linearization") {
    const double k0 = 1e-3;
    const SMKdVSolution sol = solve_smkdv({1.0, k0, 0.0}, 2.0 * kPi, 10000);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.profile.kappa.size(); ++i) {
        const double s = i * sol.profile.ds;
        worst = std::max(worst, std::abs(sol.profile.kappa[i] - k0 * std::cos(s)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("curvature first integral is conserved") {
    const SMKdVSolution sol = solve_smkdv({-1.0, 2.0, 0.0}, 10.0, 10000);
    const double I0 = smkdv_first_integral(sol.a, sol.profile.kappa[0], sol.dkappa[0]);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.dkappa.size(); ++i)
        worst = std::max(worst,
                         std::abs(smkdv_first_integral(sol.a, sol.profile.kappa[i],
                                                       sol.dkappa[i]) -
                                  I0));
    CHECK(worst / std::max(1.0, std::abs(I0)) < 1e-8);
}

TEST_CASE("cross-check: circle orbit fits a = -kappa^2/2") {
    const double c = 1.1;
    const PendulumSolution sol =
        solve_static_sine_gordon({0.0, 0.0}, {0.0, c}, 10.0, 10000);
    const CrossCheck cc = cross_check_formulations(sol);
    CHECK(!cc.degenerate);
    CHECK(cc.a_fit == doctest::Approx(-0.5 * c * c).epsilon(1e-10));
    CHECK(cc.residual_norm < 1e-10);
}

TEST_CASE("cross-check: generic pendulum orbit solves the curvature equation") {
    const PendulumSolution sol =
        solve_static_sine_gordon({0.3, 1.0}, {0.0, 1.2}, 10.0, 10000);
    const CrossCheck cc = cross_check_formulations(sol);
    CHECK(!cc.degenerate);
    CHECK(cc.residual_norm < 1e-5);
    // The fitted constant is minus the pendulum first integral.
    const double H = pendulum_first_integral(sol.params, sol.phi[0], sol.dphi[0]);
    CHECK(cc.a_fit == doctest::Approx(-H).epsilon(1e-6));
}

TEST_CASE("cross-check: straight line is reported degenerate") {
    const PendulumSolution sol =
        solve_static_sine_gordon({0.0, 0.0}, {0.4, 0.0}, 10.0, 1000);
    CHECK(cross_check_formulations(sol).degenerate);
}

TEST_CASE("cross-check: separatrix orbit matches the solitary family") {
    const double delta = 1e-8;
    const PendulumSolution sol = solve_static_sine_gordon(
        {0.0, 1.0}, {-kPi + delta, 2.0 * std::sin(0.5 * delta)}, 30.0, 30000);
    // Align at the curvature peak (parabolic refinement of the grid argmax).
    std::size_t ip = 0;
    for (std::size_t i = 1; i + 1 < sol.dphi.size(); ++i)
        if (sol.dphi[i] > sol.dphi[ip]) ip = i;
    const double dl = sol.dphi[ip - 1], dc = sol.dphi[ip], dr = sol.dphi[ip + 1];
    const double frac = 0.5 * (dl - dr) / (dl - 2.0 * dc + dr);
    const double speak = (static_cast<double>(ip) + frac) * sol.ds;
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.dphi.size(); ++i) {
        const double s = i * sol.ds - speak;
        if (std::abs(s) > 4.0) continue;
        worst = std::max(worst, std::abs(sol.dphi[i] - 2.0 / std::cosh(s)));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("lagrange integrals: constant radicand gives a circle") {
    const LagrangeParams lp{1.5, 0.0, 0.0, 0.0, 1.2, 0.9};
    const LagrangeTrace t = lagrange_integrals(lp, 0.0, 2.0, 100);
    // s is linear in phi and the curvature is constant Mc/(2K^2).
    const double want_kappa = lp.M * lp.c / (2.0 * lp.K * lp.K);
    for (std::size_t i = 1; i < t.s.size(); ++i) {
        const double dphi = t.phi[i] - t.phi[i - 1];
        const double dsl = t.s[i] - t.s[i - 1];
        CHECK(dphi / dsl == doctest::Approx(want_kappa).epsilon(1e-12));
    }
}

TEST_CASE("lagrange integrals: steps are pythagorean") {
    const LagrangeParams lp{1.2, 0.0, 0.4, -0.3, 1.1, 0.8};
    const LagrangeTrace t = lagrange_integrals(lp, 0.0, 1.2, 400);
    double worst = 0.0, hmax = 0.0;
    for (std::size_t i = 0; i + 1 < t.s.size(); ++i) {
        const double ds = t.s[i + 1] - t.s[i];
        const double dx = t.x[i + 1] - t.x[i];
        const double dy = t.y[i + 1] - t.y[i];
        worst = std::max(worst, std::abs(ds * ds - dx * dx - dy * dy));
        hmax = std::max(hmax, t.phi[i + 1] - t.phi[i]);
    }
    CHECK(worst < 10.0 * hmax * hmax * hmax);
}

TEST_CASE("lagrange integrals agree with the tangential-angle solve") {
    const LagrangeParams lp{1.2, 0.0, 0.4, -0.3, 1.1, 0.8};
    const LagrangeTrace lt = lagrange_integrals(lp, 0.0, 1.2, 200);
    const PendulumParams gauss = lp.to_gauss();
    const PendulumSolution ps = solve_static_sine_gordon(
        gauss, {0.0, lp.implied_dphi(0.0)}, lt.s.back(), 20000);
    const PlanarCurve pc = curve_from_tangent_angles(ps.phi, ps.ds, {0, 0});
    double worst = 0.0;
    for (std::size_t i = 0; i < lt.s.size(); ++i) {
        const double s = lt.s[i];
        const std::size_t j =
            std::min(static_cast<std::size_t>(s / ps.ds), pc.points.size() - 2);
        const double w = s / ps.ds - static_cast<double>(j);
        const Vec2 q = (1.0 - w) * pc.points[j] + w * pc.points[j + 1];
        worst = std::max(worst, dist(q, {lt.x[i], lt.y[i]}));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("lagrange integrals reject nonpositive radicands") {
    const LagrangeParams lp{1.0, 0.0, 0.0, -1.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)lagrange_integrals(lp, 0.0, 1.0, 32), std::invalid_argument);
}

TEST_CASE("route equivalence: rectangular arch from three formulations") {
    const std::size_t n = 2048;
    const ShapeTrace t = elastica_integrals({0.0, 0.0, 1.0, 1.0}, -1.0, 1.0, n);
    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {t.x[i], t.y[i]};
    const PlanarCurve cq = resample_arclength(pts, n);
    const double L = t.s.back();

    const SMKdVSolution sk = solve_smkdv({0.0, -2.0, 0.0}, L, n - 1);
    const PlanarCurve ck = resample_arclength(
        reconstruct_curve(sk.profile, -1.0, 0.0, kPi / 2.0).points, n);

    const PendulumSolution sg =
        solve_static_sine_gordon({-2.0, 0.0}, {kPi / 2.0, -2.0}, L, n - 1);
    const PlanarCurve cg = resample_arclength(
        curve_from_tangent_angles(sg.phi, sg.ds, {-1.0, 0.0}).points, n);

    CHECK(procrustes_distance(ck.points, cq.points) < 1e-5);
    CHECK(procrustes_distance(cg.points, cq.points) < 1e-5);
}

TEST_CASE("periodic curvature orbit closes after one computed period") {
    const PeriodicOrbit orb = smkdv_periodic_orbit(-1.0, 1.8, 256);
    CHECK(orb.kappa[0] == doctest::Approx(1.8));
    // March one further period step-by-step and compare the return value.
    const SMKdVSolution sol = solve_smkdv({-1.0, 1.8, 0.0}, orb.period, 8192);
    CHECK(std::abs(sol.profile.kappa.back() - 1.8) < 1e-8);
    CHECK(std::abs(sol.dkappa.back()) < 1e-7);
    // The orbit stays inside its turning points.
    for (double v : orb.kappa) {
        CHECK(v <= 1.8 + 1e-12);
        CHECK(v >= 0.87);
    }
}
