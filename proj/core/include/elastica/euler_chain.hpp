#pragma once
// Numerical certification of the slope-variable derivation chain behind the
// elastica: the variational coefficients P, Q of Z = q^2/(1+p^2)^{5/2}, the
// Euler-Lagrange equation in p = dy/dx, the conserved current of the
// x-translation symmetry, the integrating identity used to pass to the
// shape quadrature, and the SO(2) reduction of the multiplier pair.
//
// Sign conventions. The current is stored as
//
//     I(p, q; alpha, beta) = q^2/(1+p^2)^{5/2} + alpha sqrt(1+p^2) + beta p,
//
// constant (= -gamma) along solutions of the Euler-Lagrange equation with
// multipliers (alpha, beta). The slope ODE dp/dx = (1+p^2)^{5/4} sqrt(W) and
// the integrating identity below use the flipped orientation, where the
// radicand W = alpha sqrt(1+p^2) + beta p + gamma is nonnegative along
// solutions; evaluating I at flipped multipliers recovers that radicand.
// The multiplier part of I is odd under (alpha, beta, gamma) -> -(...); the
// kinetic part is even, so conserved values negate under the flip.

#include <cstddef>
#include <span>
#include <vector>

#include "elastica/quadrature.hpp"

namespace elastica {

struct SlopeState {
    double p = 0.0;  // dy/dx
    double q = 0.0;  // dp/dx
};

struct Multipliers {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;  // absorbed by translation; kept for completeness
};

struct PQZ {
    double Z = 0.0;
    double P = 0.0;  // dZ/dp
    double Q = 0.0;  // dZ/dq
};

PQZ coefficients_PQZ(SlopeState s);

// E(p, q) = q^2/(1+p^2)^{5/2} - alpha sqrt(1+p^2) - beta p.
double lagrangian_density(SlopeState s, const Multipliers& m);

// Euler-Lagrange residual
//   -5 p q^2/(1+p^2)^{7/2} - alpha p/sqrt(1+p^2) - d/dx[2 q/(1+p^2)^{5/2}] - beta
// on a uniform x-grid by centered differences; defined on interior nodes
// [first_index, first_index + values.size()).
struct SampledResidual {
    std::vector<double> values;
    std::size_t first_index = 0;
};
SampledResidual euler_lagrange_residual(std::span<const double> p, double dx,
                                        const Multipliers& m);

// The conserved current I (see header comment). gamma/delta are ignored.
double noether_current(SlopeState s, const Multipliers& m);

// Max deviation, over the interior of a uniform p-grid, between the centered
// p-derivative of  2 sqrt(W) / (1+p^2)^{1/4}  and the closed-form integrand
// (beta - gamma p) / ((1+p^2)^{5/4} sqrt(W)),  W = alpha sqrt(1+p^2) +
// beta p + gamma. Rejects grids where W <= 0.
double quadrature_identity_deviation(std::span<const double> p_grid,
                                     const Multipliers& m);

// SO(2) reduction of the multiplier pair: (beta, gamma) -> (beta_prime, 0)
// with beta_prime = hypot(beta, gamma), theta = atan2(gamma, beta). Rotating
// a (beta, gamma)-trace by +theta yields the (beta_prime, 0)-trace.
struct RotationReduction {
    double beta_prime = 0.0;
    double theta = 0.0;
};
RotationReduction rotation_reduce(double beta, double gamma);

// Slope-chart trace: cumulative integrals of
//   dx = dp / ((1+p^2)^{5/4} sqrt(W)),   dy = p dx,
// over the given strictly increasing p-nodes (x = y = 0 at the first node).
// Rejects nodes where W <= 0.
struct PChartTrace {
    std::vector<double> p;
    std::vector<double> x;
    std::vector<double> y;
};
PChartTrace euler_p_trace(const Multipliers& m, std::span<const double> p_nodes);

// Max deviation of the measured curvature from beta*x/2 along a trace of the
// normalized family (geometry route: uniform resampling + finite-difference
// curvature; evaluated away from the trace ends).
double kappa_x_relation(const ShapeTrace& trace, double beta);

}  // namespace elastica
