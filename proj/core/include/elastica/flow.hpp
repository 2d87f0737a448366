#pragma once
// Pseudo-spectral simulator of isometric deformations of closed curves
// driven by the curvature recursion operator
//
//     Omega v = ds^2 v + ds( kappa * dsinv(kappa v) ),
//
// its nonvanishing-curvature companion
//
//     OmegaTilde u1 = ds^2( (1/kappa) ds u1 ) + ds( kappa u1 ),
//
// and the hierarchy of flows  dkappa/dt_i = Omega^i ds kappa  (i = 0 is the
// pure translation; i = 1 is  dkappa/dt = ds(kappa^3)/2 + ds^3 kappa).
//
// Discretization: trigonometric collocation on N nodes (power of two),
// derivatives and the periodic antiderivative applied as spectral
// multipliers. The cubic term is dealiased by 2/3-rule truncation. The
// explicit integrator is classical RK4 with the dispersive stability bound
// dt <= C / kmax^(2i+1), C = 1, kmax = (2 pi / L) floor(N/3).
//
// Antiderivative gauge: dsinv alone returns the zero-mean primitive. Inside
// Omega (and in the tangential velocity u1 = dsinv(kappa u2)) the free
// constant is fixed to mean(kappa^2)/2, the choice under which
// dsinv(kappa ds kappa) = kappa^2/2 exactly and the translation chain
// reproduces the standard mKdV right-hand side. OmegaTilde contains no
// antiderivative; OmegaTilde u1 = Omega((1/kappa) ds u1) therefore holds
// for u1 whose mean equals that constant, and up to a ds-kappa translation
// term otherwise.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "elastica/curve.hpp"

namespace elastica {

struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Periodic curvature grid under flow. N must be a power of two, N >= 32.
struct FlowState {
    std::vector<double> kappa;
    double L = 0.0;  // period length
    double t = 0.0;  // flow time
};
void validate_flow_state(const FlowState& s);

struct DeformationFields {
    std::vector<double> u1;  // tangential velocity
    std::vector<double> u2;  // normal velocity
};

// Completes a normal velocity into the isometric deformation pair
// (u1 = dsinv(kappa u2) + mean(kappa^2)/2, see the gauge note above).
DeformationFields deformation_fields(std::span<const double> kappa,
                                     std::span<const double> u2, double L);

// Spectral derivative of given order on an N-point periodic grid of length L.
std::vector<double> spectral_derivative(std::span<const double> f, double L,
                                        int order = 1);

// Zero-mean spectral antiderivative. Rejects input whose mean exceeds
// 1e-10 (relative to max(1, sup|f|)), reporting the mean.
std::vector<double> antiderivative_periodic(std::span<const double> f, double L);

// u1 = dsinv(kappa u2) + mean(kappa^2)/2 (see gauge note above). Rejects
// nonzero-mean kappa*u2.
std::vector<double> tangential_velocity(std::span<const double> kappa,
                                        std::span<const double> u2, double L);

std::vector<double> omega_apply(std::span<const double> kappa,
                                std::span<const double> v, double L);

// Requires min|kappa| > 1e-6 max|kappa| (inflectional profiles rejected).
std::vector<double> omega_tilde_apply(std::span<const double> kappa,
                                      std::span<const double> u1, double L);

// ds(kappa^3)/2 + ds^3 kappa, the u2 = ds kappa instance of Omega.
std::vector<double> mkdv_rhs(std::span<const double> kappa, double L);

// Dispersive RK4 bound for the i-th flow on an (N, L) grid.
double stable_dt(double L, std::size_t N, int hierarchy_index);

// Advances `steps` RK4 steps of dkappa/dt = Omega^i ds kappa. The i = 1
// right-hand side is evaluated by the mkdv_rhs kernel (the same code path as
// the public function). Blowup (sup|kappa| growing by 1e3x) aborts with a
// numerical_error carrying step and time.
FlowState evolve(FlowState state, int hierarchy_index, double dt,
                 std::size_t steps);

// One explicit Euler step of dz/dt = (u1 + i u2) ds z on a closed curve,
// with u1 the gauge-fixed tangential velocity. Segment lengths are preserved
// to O(dt^2). Rejects open curves and nonzero-mean kappa*u2.
PlanarCurve deform_curve(const PlanarCurve& curve, std::span<const double> u2,
                         double dt);

}  // namespace elastica
