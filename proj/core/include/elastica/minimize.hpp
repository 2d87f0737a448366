#pragma once
// Direct discrete minimization of the bending energy over inextensible
// polylines with fixed endpoints (optionally clamped end tangents, or a
// closed loop), and certification of the minimizer against the conserved
// current and the curvature equation.
//
// Parameterization: node tangent angles phi_0..phi_N on a uniform arclength
// grid, h = L/N. Segment j runs along the midpoint angle (phi_j+phi_{j+1})/2
// with exact length h, so local and total length are built into the chart
// and the endpoint map equals the reported polyline's endpoint exactly.
// Energy: sum (phi_{j+1}-phi_j)^2 / h.
//
// Optimizer: projected gradient on the endpoint-constraint manifold with
// Armijo backtracking; search directions are preconditioned by the inverse
// of the energy Hessian (a tridiagonal Laplacian), which keeps the iteration
// count mesh-independent. Convergence is declared on the Euclidean norm of
// the projected (unpreconditioned) gradient.
//
// Certification: at a constrained stationary point the angles satisfy a
// discrete pendulum recurrence whose force derives from the recovered
// endpoint multipliers. The conserved current is evaluated with its O(h^2)
// backward-error correction,
//
//   I_j = v_j^2/2 + V(phi_j) + h^2/24 (5 v_j^2 V''(phi_j) - V'(phi_j)^2),
//
// v_j the centered angle difference; the raw midpoint energy drifts at
// O(h^2) while the corrected current is constant to O(h^4).

#include <cstddef>
#include <optional>
#include <vector>

#include "elastica/curve.hpp"

namespace elastica {

struct TangentClamp {
    bool clamped = false;
    double angle = 0.0;
};

struct BoundaryConditions {
    Vec2 start{0.0, 0.0};
    Vec2 end{0.0, 0.0};
    TangentClamp start_tangent;
    TangentClamp end_tangent;
    double total_length = 0.0;
    bool closed = false;  // periodic variant; endpoints ignored except start
};

struct MinimizeReport {
    PlanarCurve curve;
    std::vector<double> angles;  // node tangent angles of the solution
    double energy = 0.0;         // discrete objective at the solution
    double alpha = 0.0;          // fitted slope-chart multipliers
    double beta = 0.0;
    double el_residual_norm = 0.0;
    double noether_deviation = 0.0;
    double lambda_x = 0.0;  // endpoint-constraint multipliers (KKT)
    double lambda_y = 0.0;
    double grad_norm = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    bool degenerate = false;  // straight line: multipliers unidentifiable
    std::vector<double> energy_history;  // per accepted step, when recorded
};

struct MinimizeOptions {
    double grad_tol = 1e-8;
    std::size_t max_iterations = 100000;
    bool record_energy_history = false;
};

// bc.total_length must be >= the endpoint distance (equality gives the
// straight segment, returned immediately). Non-convergence is reported in
// the result, never silently. The optional seed must have n+1 points (open)
// or n points (closed) and is used for its tangent angles; by default a
// circular arc through the endpoints (tie broken toward positive curvature)
// seeds the iteration.
MinimizeReport minimize_elastica(const BoundaryConditions& bc, std::size_t n,
                                 const PlanarCurve* seed = nullptr,
                                 const MinimizeOptions& opts = {});

// Least-squares fit of the multipliers (alpha, beta) minimizing the
// slope-equation residual along a curve; fit_residual is the post-fit
// maximum residual. Evaluated on samples with |cos phi| >= 0.2 (the slope
// chart is singular at vertical tangents). Straight lines are degenerate.
struct MultiplierFit {
    double alpha = 0.0;
    double beta = 0.0;
    double fit_residual = 0.0;
    bool degenerate = false;
};
MultiplierFit estimate_multipliers(const PlanarCurve& curve);

struct Certification {
    double noether_deviation = 0.0;  // std of the corrected discrete current
    double smkdv_residual = 0.0;     // max |a kappa + kappa^3/2 + kappa''|
    double a_fit = 0.0;
    bool degenerate = false;
    bool pass_noether = false;  // < 1e-8
    bool pass_smkdv = false;    // < 1e-4
};
Certification certify_minimizer(const MinimizeReport& report);

}  // namespace elastica
