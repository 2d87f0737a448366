#pragma once
// The two classical ODE routes to the elastica and their cross-checks:
//
//   tangential angle:  phi'' + A cos phi + B sin phi = 0
//                      (first integral H = phi'^2/2 + A sin phi - B cos phi)
//   curvature:         kappa'' + kappa^3/2 + a kappa = 0
//                      (first integral kappa'^2/2 + kappa^4/8 + a kappa^2/2)
//
// A sine-Gordon orbit with first-integral value H solves the curvature
// equation with a = -H. Fixed-step classical RK4 throughout (step = L/n).

#include <cstddef>
#include <span>
#include <vector>

#include "elastica/curve.hpp"

namespace elastica {

struct PendulumParams {
    double A = 0.0;
    double B = 0.0;
};

struct PendulumState {
    double phi = 0.0;
    double dphi = 0.0;
};

// Lagrange's alternate constant set. Only K, P, N, M, c enter the arclength
// radicand R(phi) = M^2 c^2/(4K^2) + P(1 - cos phi) + N sin phi; the historic
// constant C is retained but over-parameterizes the family and is unused by
// the quadrature (see to_gauss for the angle-equation reduction).
struct LagrangeParams {
    double K = 1.0;
    double C = 0.0;
    double P = 0.0;
    double N = 0.0;
    double M = 0.0;
    double c = 0.0;

    // Differentiating (K phi')^2 = R gives phi'' = (P sin phi + N cos phi)/(2K^2),
    // i.e. the pendulum with A = -N/(2K^2), B = -P/(2K^2).
    PendulumParams to_gauss() const;
    // |phi'| implied by the radicand at a given angle.
    double implied_dphi(double phi) const;
};

struct SMKdVParams {
    double a = 0.0;
    double kappa0 = 0.0;
    double dkappa0 = 0.0;
};

double pendulum_first_integral(PendulumParams p, double phi, double dphi);
double smkdv_first_integral(double a, double kappa, double dkappa);

struct PendulumSolution {
    std::vector<double> phi;   // n+1 samples
    std::vector<double> dphi;  // = kappa at the nodes
    double ds = 0.0;
    PendulumParams params;
};
PendulumSolution solve_static_sine_gordon(PendulumParams p, PendulumState init,
                                          double length, std::size_t n);

struct SMKdVSolution {
    CurvatureProfile profile;  // n+1 samples, open grid
    std::vector<double> dkappa;
    double a = 0.0;
};
SMKdVSolution solve_smkdv(SMKdVParams p, double length, std::size_t n);

// Fits the constant a so that kappa = dphi/ds of a sine-Gordon orbit solves
// the curvature equation: least squares of kappa'' + kappa^3/2 against
// -kappa (centered differences, interior nodes). A straight line (kappa ~ 0)
// leaves a unidentifiable and is reported degenerate.
struct CrossCheck {
    double a_fit = 0.0;
    double residual_norm = 0.0;
    bool degenerate = false;
};
CrossCheck cross_check_formulations(const PendulumSolution& sol);

// Lagrange's elliptic integrals over the tangential angle:
//   ds = K dphi / sqrt(R), dx = cos phi ds, dy = sin phi ds.
// Cumulative over [phi0, phi1] (increasing), n samples; rejects nonpositive
// radicands reporting the violating phi.
struct LagrangeTrace {
    std::vector<double> phi;
    std::vector<double> s;
    std::vector<double> x;
    std::vector<double> y;
};
LagrangeTrace lagrange_integrals(const LagrangeParams& p, double phi0,
                                 double phi1, std::size_t n);

// One full period of a genuinely oscillating curvature orbit (kappa'(0) = 0
// at kappa0), sampled on N uniform nodes for use as a periodic flow profile.
// The period is computed by quadrature with the turning-point singularities
// removed analytically.
struct PeriodicOrbit {
    std::vector<double> kappa;
    double period = 0.0;
};
PeriodicOrbit smkdv_periodic_orbit(double a, double kappa0, std::size_t N);

}  // namespace elastica
