#pragma once
// Direct quadrature of the elastica's elliptic-integral representation and
// its normalized (shifted) form, the rectangular/lemniscatic special cases,
// and species classification from the pendulum modulus.
//
// The shape integrals are, with Phi(x) = alpha + beta*x + gamma*x^2,
//
//     s(X) = int_{X0}^{X} |a| dx / sqrt(a^2 - Phi^2),
//     y(X) = int_{X0}^{X} Phi dx / sqrt(a^2 - Phi^2),
//
// so that ds^2 = dx^2 + dy^2 holds exactly and |dy/ds| <= 1. The curvature
// along a trace is linear in x:  kappa(x) = Phi'(x) / |a|.
//
// Turning points (simple roots of a^2 = Phi^2) bound the admissible domain;
// the integrals stay convergent there and are handled by the substitution
// x = r -+ xi^2, which removes the inverse-square-root singularity.

#include <cstddef>
#include <utility>
#include <vector>

namespace elastica {

struct ElasticaParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double a = 1.0;
};

// a != 0 and a nonempty admissible domain {x : |Phi(x)| <= |a|} (the closure;
// a domain collapsing to a single tangency point is the constant-curvature
// limit and is accepted). Throws std::invalid_argument otherwise.
void validate_params(const ElasticaParams& p);

// Euler's alternate constants: alpha = 4m/a^2, beta = 4n/a^2 of the
// normalized form. Pure conversion, no separate state.
std::pair<double, double> euler_mn_to_normalized(double m, double n, double a);

struct ShapeTrace {
    std::vector<double> x;
    std::vector<double> s;
    std::vector<double> y;
};

// Cumulative shape integrals over [x0, x1] (x0 <= x1, inside the admissible
// closure; endpoints may sit on turning points). n >= 2 output samples,
// clustered toward singular endpoints. Rejects intervals that exit the
// admissible domain, reporting the violating x.
ShapeTrace elastica_integrals(const ElasticaParams& p, double x0, double x1,
                              std::size_t n);

// kappa(x) = Phi'(x)/|a| along a trace of `p`.
double trace_curvature(const ElasticaParams& p, double x);

// Sorted real roots of Phi(x) = +-a. Empty when gamma = beta = 0.
std::vector<double> turning_points(const ElasticaParams& p);

// Normalized-form trace: Phi_n(x) = beta^2 x^2 - 4 alpha with |a| = 4|beta|,
// i.e.  p = (beta^2 x^2 - 4 alpha)/sqrt((4 beta)^2 - (...)^2)  and
//       ds = 4 beta dx / sqrt((4 beta)^2 - (...)^2).
// Along it kappa = beta*x/2. `equivalent` holds the general parameter set
// (-4 alpha, 0, beta^2, 4 beta) realizing the same trace.
struct NormalizedTrace {
    ShapeTrace trace;
    ElasticaParams equivalent;
};
NormalizedTrace euler_normalized_trace(double alpha, double beta, double x0,
                                       double x1, std::size_t n);

// The x-shift reducing a general parameter set (gamma != 0) to the
// normalized form: with X = x - shift, the trace of `p` coincides with the
// normalized trace of (alpha, beta) pointwise (same arclength scale).
struct NormalizedForm {
    double alpha = 0.0;
    double beta = 0.0;
    double shift = 0.0;
};
NormalizedForm normalize_params(const ElasticaParams& p);

// F(w) = int_0^w dt / sqrt(1 - t^4), odd in w, |w| <= 1. F(1) is the half
// lemniscate constant.
double lemniscatic_integral(double w);

// Complete elliptic integrals (Legendre form), by Gauss-Legendre panels.
double complete_elliptic_K(double k);
double complete_elliptic_E(double k);

enum class Species {
    straight_line,
    sinusoidal_small_amplitude,
    inflectional,
    rectangular,
    lemniscoid,
    solitary,
    non_inflectional,
    circle,
};
const char* to_string(Species s);

struct SpeciesLabel {
    Species tag = Species::straight_line;
    double modulus = 0.0;  // pendulum modulus k (reciprocal for k > 1)
};

// Pendulum modulus of the parameter set: k^2 = (h + 1)/2 with
// h = (beta^2 - 4 alpha gamma) / (4 |gamma a|). Thresholds k_rect and k_lem
// are found by root-finding on the closure conditions (tangent swing = pi;
// vanishing drift per period) to 1e-8. Labels are invariant under the sign
// flip (alpha, beta, gamma) -> -(alpha, beta, gamma).
SpeciesLabel classify_species(const ElasticaParams& p);

// The classification thresholds (computed once, cached).
double rectangular_modulus();
double lemniscoid_modulus();

}  // namespace elastica
