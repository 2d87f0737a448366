#include "elastica/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "elastica/curve.hpp"
#include "elastica/euler_chain.hpp"
#include "elastica/flow.hpp"
#include "elastica/minimize.hpp"
#include "elastica/ode.hpp"
#include "elastica/quadrature.hpp"

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

void add(SuiteReport* rep, std::string name, double value, double threshold,
         bool pass) {
    rep->checks.push_back({std::move(name), value, threshold, pass});
    rep->pass = rep->pass && rep->checks.back().pass;
}
void add_below(SuiteReport* rep, std::string name, double value,
               double threshold) {
    add(rep, std::move(name), value, threshold, value <= threshold);
}

double rel_drift(double a, double b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

// The canonical rectangular arch: quadrature parameters (0, 0, 1, 1),
// x in [-1, 1], curvature 2x, start pose (-1, 0) pointing up.
ElasticaParams rectangular_params() { return {0.0, 0.0, 1.0, 1.0}; }

struct RectangularArch {
    double length = 0.0;  // total arclength (two half lemniscate constants)
    double rise = 0.0;    // y displacement over the arch
};
RectangularArch rectangular_arch() {
    const ShapeTrace t = elastica_integrals(rectangular_params(), -1.0, 1.0, 512);
    return {t.s.back(), t.y.back()};
}

std::vector<Vec2> trace_points(const ShapeTrace& t) {
    std::vector<Vec2> pts(t.x.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {t.x[i], t.y[i]};
    return pts;
}

// Pendulum constants of a curvature orbit in a given frame:
// kappa' = -A cos phi - B sin phi and A sin phi - B cos phi = -a - kappa^2/2.
void pendulum_constants_from_smkdv(double a, double kappa0, double dkappa0,
                                   double phi0, double* A, double* B) {
    const double c = std::cos(phi0), s = std::sin(phi0);
    const double r1 = -dkappa0;
    const double r2 = -a - 0.5 * kappa0 * kappa0;
    // [c s; s -c] [A B]^T = [r1 r2]^T, orthogonal up to sign.
    *A = c * r1 + s * r2;
    *B = s * r1 - c * r2;
}

SuiteReport suite_curve_core() {
    SuiteReport rep{"curve-core", {}, true};

    {
        const std::size_t n = 2048;
        const double L = 2.0 * kPi;
        CurvatureProfile prof;
        prof.ds = L / static_cast<double>(n - 1);
        prof.periodic = false;
        prof.kappa.resize(n);
        for (std::size_t i = 0; i < n; ++i) prof.kappa[i] = std::sin(i * prof.ds);
        const PlanarCurve c = reconstruct_curve(prof, 0.0, 0.0, 0.0);
        const CurvatureProfile back = curvature_of(c);
        double err = 0.0;
        for (std::size_t i = 2; i + 2 < n; ++i)
            err = std::max(err, std::abs(back.kappa[i] - prof.kappa[i]));
        add_below(&rep, "curvature-roundtrip-max-error", err,
                  5.0 * prof.ds * prof.ds);
    }

    {
        CurvatureProfile prof;
        const std::size_t n = 16384;
        prof.ds = 20.0 / static_cast<double>(n - 1);
        prof.kappa.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            prof.kappa[i] = 2.0 / std::cosh(-10.0 + i * prof.ds);
        const PlanarCurve c = reconstruct_curve(prof, 0.0, 0.0, 0.0);
        const double e0 = bending_energy(c);
        PlanarCurve moved = c;
        for (Vec2& p : moved.points) p = rotate(p, 1.1) + Vec2{3.0, -2.0};
        add_below(&rep, "bending-energy-rigid-invariance",
                  rel_drift(bending_energy(moved), e0), 1e-12);
    }

    {
        CurvatureProfile prof;
        const std::size_t n = 256;
        prof.ds = 2.0 * kPi / static_cast<double>(n);
        prof.periodic = true;
        prof.kappa.assign(n, 1.0);
        const ReconstructedCurve rc = reconstruct_curve_detailed(prof, 0, 0, 0);
        double worst = 0.0;
        for (double a : rc.phi) {
            const double t = std::cos(a) * std::cos(a) + std::sin(a) * std::sin(a);
            worst = std::max(worst, std::abs(t - 1.0));
        }
        add_below(&rep, "unit-speed-by-construction", worst, 1e-12);
    }

    {
        std::mt19937 rng(42);
        std::uniform_real_distribution<double> turn(-0.25, 0.25);
        std::vector<Vec2> poly{{0, 0}};
        double ang = 0.1;
        for (int i = 0; i < 30; ++i) {
            ang += turn(rng);
            poly.push_back(poly.back() + Vec2{std::cos(ang), std::sin(ang)});
        }
        const PlanarCurve c = resample_arclength(poly, 1000);
        double dev = 0.0;
        for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
            dev = std::max(dev,
                           std::abs(dist(c.points[i + 1], c.points[i]) - c.ds) / c.ds);
        add_below(&rep, "resample-segment-uniformity", dev, 1e-6);
    }

    return rep;
}

SuiteReport suite_quadrature() {
    SuiteReport rep{"quadrature", {}, true};

    {
        // General vs normalized-form trace after the computed x-shift.
        const ElasticaParams gen{0.3, 0.4, 1.0, 1.2};
        const NormalizedForm nf = normalize_params(gen);
        const std::size_t n = 257;
        const std::vector<double> tp = turning_points(gen);
        // An inner window of the admissible interval around the shift.
        const double x0 = nf.shift - 0.4, x1 = nf.shift + 0.5;
        (void)tp;
        const ShapeTrace tg = elastica_integrals(gen, x0, x1, n);
        const NormalizedTrace tn =
            euler_normalized_trace(nf.alpha, nf.beta, x0 - nf.shift, x1 - nf.shift, n);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(tg.s[i] - tn.trace.s[i]));
            worst = std::max(worst, std::abs(tg.y[i] - tn.trace.y[i]));
            worst = std::max(worst,
                             std::abs(tg.x[i] - (tn.trace.x[i] + nf.shift)));
        }
        add_below(&rep, "normalized-form-shift-consistency", worst, 1e-9);
    }

    {
        // Quadrature trace vs curvature-equation reconstruction (kappa = 2x).
        const std::size_t n = 2048;
        const ShapeTrace t = elastica_integrals(rectangular_params(), -1.0, 1.0, n);
        const PlanarCurve cq = resample_arclength(trace_points(t), n);
        const double L = t.s.back();
        SMKdVSolution sol = solve_smkdv({0.0, -2.0, 0.0}, L, n - 1);
        const PlanarCurve cs = reconstruct_curve(sol.profile, -1.0, 0.0, kPi / 2.0);
        const PlanarCurve csr = resample_arclength(cs.points, n);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, dist(cq.points[i], csr.points[i]));
        add_below(&rep, "trace-vs-curvature-equation", worst, 1e-6);
    }

    {
        const std::size_t n = 512;
        const ShapeTrace t =
            elastica_integrals(rectangular_params(), -0.95, 0.95, n);
        double worst = 0.0, hmax = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double dsq = (t.s[i + 1] - t.s[i]) * (t.s[i + 1] - t.s[i]);
            const double dx = t.x[i + 1] - t.x[i];
            const double dy = t.y[i + 1] - t.y[i];
            worst = std::max(worst, std::abs(dsq - dx * dx - dy * dy));
            hmax = std::max(hmax, std::abs(dx));
        }
        add_below(&rep, "pythagorean-step-defect", worst, 10.0 * hmax * hmax * hmax);
    }

    {
        double worst = 0.0;
        for (double w : {0.3, 0.77, 0.995})
            worst = std::max(worst,
                             std::abs(lemniscatic_integral(-w) + lemniscatic_integral(w)));
        add_below(&rep, "lemniscatic-oddness", worst, 0.0);
    }

    {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> uv(-1.0, 1.0);
        const double F1 = lemniscatic_integral(1.0);
        double worst = 0.0;
        int kept = 0;
        while (kept < 100) {
            const double u = uv(rng), z = uv(rng);
            const double Fu = lemniscatic_integral(u), Fz = lemniscatic_integral(z);
            if (std::abs(Fu + Fz) > F1) continue;
            const double w = (z * std::sqrt(1.0 - u * u * u * u) +
                              u * std::sqrt(1.0 - z * z * z * z)) /
                             (1.0 + u * u * z * z);
            worst = std::max(worst, std::abs(lemniscatic_integral(w) - Fu - Fz));
            ++kept;
        }
        add_below(&rep, "lemniscatic-addition-law", worst, 1e-10);
    }

    {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> par(-2.0, 2.0);
        int mismatches = 0;
        for (int i = 0; i < 200; ++i) {
            ElasticaParams p{par(rng), par(rng), par(rng), 0.0};
            p.a = 1.0 + std::abs(par(rng));
            try {
                validate_params(p);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const SpeciesLabel l1 = classify_species(p);
            const SpeciesLabel l2 =
                classify_species({-p.alpha, -p.beta, -p.gamma, p.a});
            if (l1.tag != l2.tag) ++mismatches;
        }
        add_below(&rep, "classification-sign-flip-invariance",
                  static_cast<double>(mismatches), 0.0);
    }

    return rep;
}

SuiteReport suite_euler_chain() {
    SuiteReport rep{"euler-chain", {}, true};

    {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> st(-2.0, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const SlopeState s{st(rng), st(rng)};
            const PQZ c = coefficients_PQZ(s);
            const double hp = 1e-5 * std::max(1.0, std::abs(s.p));
            const double hq = 1e-5 * std::max(1.0, std::abs(s.q));
            const double dP = (coefficients_PQZ({s.p + hp, s.q}).Z -
                               coefficients_PQZ({s.p - hp, s.q}).Z) /
                              (2.0 * hp);
            const double dQ = (coefficients_PQZ({s.p, s.q + hq}).Z -
                               coefficients_PQZ({s.p, s.q - hq}).Z) /
                              (2.0 * hq);
            const double scaleP = std::max(1.0, std::abs(c.P));
            const double scaleQ = std::max(1.0, std::abs(c.Q));
            worst = std::max(worst, std::abs(c.P - dP) / scaleP);
            worst = std::max(worst, std::abs(c.Q - dQ) / scaleQ);
        }
        add_below(&rep, "pq-derivative-match", worst, 1e-6);
    }

    {
        // Conserved current along a curvature-equation orbit, slope chart.
        const double a = 1.0, kappa0 = 0.5, phi0 = 0.3;
        const std::size_t n = 10000;
        const SMKdVSolution sol = solve_smkdv({a, kappa0, 0.0}, 10.0, n);
        double A = 0.0, B = 0.0;
        pendulum_constants_from_smkdv(a, kappa0, 0.0, phi0, &A, &B);
        const Multipliers mult{2.0 * a, 2.0 * A, 0.0, 0.0};
        // sin phi, cos phi recovered algebraically from (kappa, kappa') via
        // the frame constants; no quadrature enters the chain.
        const double H =
            0.5 * kappa0 * kappa0 + A * std::sin(phi0) - B * std::cos(phi0);
        const double det = -(A * A + B * B);
        double mean = 0.0;
        std::vector<double> I(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            const double k = sol.profile.kappa[i], dk = sol.dkappa[i];
            const double b1 = H - 0.5 * k * k;
            const double sphi = (-A * b1 + B * dk) / det;
            const double cphi = (B * b1 + A * dk) / det;
            const double t = sphi / cphi;
            const double q = k * std::pow(1.0 + t * t, 1.5);
            I[i] = noether_current({t, q}, mult);
            mean += I[i];
        }
        mean /= static_cast<double>(n + 1);
        double var = 0.0;
        for (double v : I) var += (v - mean) * (v - mean);
        const double ratio =
            std::sqrt(var / static_cast<double>(n + 1)) / std::abs(mean);
        add_below(&rep, "noether-constancy-ratio", ratio, 1e-8);
    }

    {
        // d/dx of the current equals -q times the Euler-Lagrange residual on
        // arbitrary smooth slope data.
        const std::size_t n = 2048;
        const double dx = 4.0 / static_cast<double>(n - 1);
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = -2.0 + i * dx;
            p[i] = 0.4 * std::sin(1.3 * x) + 0.1 * x;
        }
        const Multipliers m{0.7, -0.3, 0.0, 0.0};
        const SampledResidual r = euler_lagrange_residual(p, dx, m);
        std::vector<double> I(n, 0.0), q(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            q[i] = (p[i + 1] - p[i - 1]) / (2.0 * dx);
            I[i] = noether_current({p[i], q[i]}, m);
        }
        double worst = 0.0;
        for (std::size_t i = 3; i + 3 < n; ++i) {
            const double dI = (I[i + 1] - I[i - 1]) / (2.0 * dx);
            worst = std::max(worst,
                             std::abs(dI + q[i] * r.values[i - r.first_index]));
        }
        add_below(&rep, "conservation-chain-rule", worst, 50.0 * dx * dx);
    }

    {
        // Conserved values negate when the arbitrary constants flip sign.
        const Multipliers m{1.0, 0.8, 0.3, 0.0};
        auto solve_p_ode = [](const Multipliers& mm, double p0, double x1,
                              std::size_t steps) {
            // dp/dx = (1+p^2)^{5/4} sqrt(W(p)), flipped orientation.
            std::vector<double> p(steps + 1);
            p[0] = p0;
            const double h = x1 / static_cast<double>(steps);
            auto f = [&mm](double pp) {
                const double W = mm.alpha * std::sqrt(1.0 + pp * pp) +
                                 mm.beta * pp + mm.gamma;
                return std::pow(1.0 + pp * pp, 1.25) * std::sqrt(std::max(0.0, W));
            };
            for (std::size_t i = 0; i < steps; ++i) {
                const double k1 = f(p[i]);
                const double k2 = f(p[i] + 0.5 * h * k1);
                const double k3 = f(p[i] + 0.5 * h * k2);
                const double k4 = f(p[i] + h * k3);
                p[i + 1] = p[i] + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            return p;
        };
        const std::vector<double> pa = solve_p_ode(m, 0.1, 0.5, 4000);
        const Multipliers flip{-m.alpha, -m.beta, -m.gamma, 0.0};
        double worst = 0.0;
        for (std::size_t i = 0; i < pa.size(); i += 100) {
            // q along the solve, from the equation itself.
            const double W = m.alpha * std::sqrt(1.0 + pa[i] * pa[i]) +
                             m.beta * pa[i] + m.gamma;
            const double q = std::pow(1.0 + pa[i] * pa[i], 1.25) * std::sqrt(W);
            const double J1 = noether_current({pa[i], q}, flip);
            worst = std::max(worst, std::abs(J1 - m.gamma));
        }
        add_below(&rep, "sign-flip-negates-conserved-value", worst, 1e-10);
    }

    return rep;
}

SuiteReport suite_ode() {
    SuiteReport rep{"ode", {}, true};

    {
        const PendulumSolution sol =
            solve_static_sine_gordon({0.3, 1.0}, {0.2, 0.5}, 10.0, 10000);
        const double H0 = pendulum_first_integral(sol.params, sol.phi[0], sol.dphi[0]);
        double worst = 0.0;
        for (std::size_t i = 0; i < sol.phi.size(); ++i)
            worst = std::max(worst,
                             std::abs(pendulum_first_integral(sol.params, sol.phi[i],
                                                              sol.dphi[i]) -
                                      H0));
        add_below(&rep, "pendulum-first-integral-drift",
                  worst / std::max(1.0, std::abs(H0)), 1e-8);
    }

    {
        const SMKdVSolution sol = solve_smkdv({-1.0, 2.0, 0.0}, 10.0, 10000);
        const double I0 = smkdv_first_integral(sol.a, sol.profile.kappa[0],
                                               sol.dkappa[0]);
        double worst = 0.0;
        for (std::size_t i = 0; i < sol.dkappa.size(); ++i)
            worst = std::max(
                worst, std::abs(smkdv_first_integral(sol.a, sol.profile.kappa[i],
                                                     sol.dkappa[i]) -
                                I0));
        add_below(&rep, "curvature-first-integral-drift",
                  worst / std::max(1.0, std::abs(I0)), 1e-8);
    }

    {
        // Rectangular arch by three routes, rigidly aligned.
        const std::size_t n = 2048;
        const ShapeTrace t = elastica_integrals(rectangular_params(), -1.0, 1.0, n);
        const double L = t.s.back();
        const PlanarCurve cq = resample_arclength(trace_points(t), n);

        const SMKdVSolution sk = solve_smkdv({0.0, -2.0, 0.0}, L, n - 1);
        const PlanarCurve ck = resample_arclength(
            reconstruct_curve(sk.profile, -1.0, 0.0, kPi / 2.0).points, n);

        const PendulumSolution sg = solve_static_sine_gordon(
            {-2.0, 0.0}, {kPi / 2.0, -2.0}, L, n - 1);
        const PlanarCurve cg = resample_arclength(
            curve_from_tangent_angles(sg.phi, sg.ds, {-1.0, 0.0}).points, n);

        const double d1 = procrustes_distance(ck.points, cq.points);
        const double d2 = procrustes_distance(cg.points, cq.points);
        add_below(&rep, "route-equivalence-procrustes", std::max(d1, d2), 1e-5);
    }

    {
        const PendulumSolution sol =
            solve_static_sine_gordon({0.3, 1.0}, {0.0, 1.2}, 10.0, 10000);
        const CrossCheck cc = cross_check_formulations(sol);
        add_below(&rep, "pendulum-curvature-equation-residual", cc.residual_norm,
                  1e-5);
    }

    return rep;
}

SuiteReport suite_gp_flow() {
    SuiteReport rep{"gp-flow", {}, true};
    const double L = 2.0 * kPi;

    {
        std::mt19937 rng(17);
        std::normal_distribution<double> coef(0.0, 1.0);
        const std::size_t N = 256;
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> kappa(N, 0.0);
            for (int mode = 0; mode <= 28; ++mode) {
                const double cr = coef(rng) / (1.0 + mode * mode);
                const double ci = coef(rng) / (1.0 + mode * mode);
                for (std::size_t i = 0; i < N; ++i) {
                    const double s = L * static_cast<double>(i) / N;
                    kappa[i] += cr * std::cos(mode * s) + ci * std::sin(mode * s);
                }
            }
            const std::vector<double> lhs =
                omega_apply(kappa, spectral_derivative(kappa, L), L);
            const std::vector<double> rhs = mkdv_rhs(kappa, L);
            for (std::size_t i = 0; i < N; ++i)
                worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
        }
        add_below(&rep, "recursion-operator-identity", worst, 1e-10);
    }

    {
        FlowState st;
        st.L = L;
        st.kappa.resize(256);
        for (std::size_t i = 0; i < 256; ++i) st.kappa[i] = std::cos(L * i / 256.0);
        const double dt = stable_dt(L, 256, 1);
        const std::size_t steps = static_cast<std::size_t>(0.02 / dt);
        double m0 = 0.0, e0 = 0.0;
        for (double v : st.kappa) {
            m0 += v;
            e0 += v * v;
        }
        const FlowState out = evolve(st, 1, dt, steps);
        double m1 = 0.0, e1 = 0.0;
        for (double v : out.kappa) {
            m1 += v;
            e1 += v * v;
        }
        add_below(&rep, "turning-number-drift",
                  std::abs(m1 - m0) / static_cast<double>(out.kappa.size()), 1e-10);
        add_below(&rep, "bending-energy-drift", rel_drift(e1, e0), 1e-6);
    }

    {
        FlowState st;
        st.L = L;
        st.kappa.resize(32);
        for (std::size_t i = 0; i < 32; ++i)
            st.kappa[i] = 1.0 + 0.2 * std::cos(L * i / 32.0);
        const double dt = stable_dt(L, 32, 2);
        const std::size_t steps = static_cast<std::size_t>(0.05 / dt);
        double e0 = 0.0, m0 = 0.0;
        for (double v : st.kappa) {
            e0 += v * v;
            m0 += v;
        }
        const FlowState out = evolve(st, 2, dt, steps);
        double e1 = 0.0, m1 = 0.0;
        for (double v : out.kappa) {
            e1 += v * v;
            m1 += v;
        }
        add_below(&rep, "hierarchy-i2-turning-number-drift",
                  std::abs(m1 - m0) / 32.0, 1e-10);
        add_below(&rep, "hierarchy-i2-energy-drift", rel_drift(e1, e0), 1e-6);
    }

    {
        // i = 0 is the translation flow: compare against a spectral shift.
        FlowState st;
        st.L = L;
        st.kappa.resize(128);
        for (std::size_t i = 0; i < 128; ++i) {
            const double s = L * i / 128.0;
            st.kappa[i] = 0.3 * std::cos(s) + 0.1 * std::sin(2.0 * s);
        }
        const double dt = stable_dt(L, 128, 0);
        const std::size_t steps = static_cast<std::size_t>(0.3 / dt);
        const double t = dt * static_cast<double>(steps);
        const FlowState out = evolve(st, 0, dt, steps);
        double worst = 0.0;
        for (std::size_t i = 0; i < 128; ++i) {
            const double s = L * i / 128.0 + t;
            const double want = 0.3 * std::cos(s) + 0.1 * std::sin(2.0 * s);
            worst = std::max(worst, std::abs(out.kappa[i] - want));
        }
        add_below(&rep, "translation-flow-shift", worst, 1e-8);
    }

    {
        // Isometry of one explicit deformation step on a perturbed circle
        // (kappa = 1 + 3 mu cos 3s closes exactly for every mu).
        const std::size_t N = 2048;
        CurvatureProfile prof;
        prof.ds = L / static_cast<double>(N);
        prof.periodic = true;
        prof.kappa.resize(N);
        for (std::size_t i = 0; i < N; ++i)
            prof.kappa[i] = 1.0 + 0.15 * std::cos(3.0 * L * i / N);
        const PlanarCurve circleish = reconstruct_curve(prof, 1.0, 0.0, kPi / 2.0);
        const CurvatureProfile k = curvature_of(circleish);
        const std::vector<double> u2 =
            spectral_derivative(k.kappa, circleish.total_length());
        const double dt = 1e-4;
        const PlanarCurve moved = deform_curve(circleish, u2, dt);
        double worst = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double len = dist(moved.points[(i + 1) % N], moved.points[i]);
            worst = std::max(worst, std::abs(len - circleish.ds) / circleish.ds);
        }
        add_below(&rep, "deformation-isometry-defect", worst, 100.0 * dt * dt);
    }

    return rep;
}

SuiteReport suite_minimizer() {
    SuiteReport rep{"minimizer", {}, true};
    const RectangularArch arch = rectangular_arch();

    {
        BoundaryConditions bc;
        bc.closed = true;
        bc.start = {1.0, 0.0};
        bc.total_length = 2.0 * kPi;
        MinimizeOptions opts;
        opts.record_energy_history = true;
        const MinimizeReport r = minimize_elastica(bc, 256, nullptr, opts);
        add(&rep, "closed-loop-converged", r.converged ? 0.0 : 1.0, 0.5,
            r.converged);
        add_below(&rep, "closed-loop-circle-energy",
                  rel_drift(r.energy, 4.0 * kPi * kPi / bc.total_length), 1e-6);
        double worst_inc = 0.0;
        for (std::size_t i = 1; i < r.energy_history.size(); ++i)
            worst_inc = std::max(worst_inc,
                                 r.energy_history[i] - r.energy_history[i - 1]);
        add_below(&rep, "energy-monotonicity-max-increase", worst_inc, 0.0);
    }

    BoundaryConditions rect;
    rect.start = {-1.0, 0.0};
    rect.end = {1.0, arch.rise};
    rect.start_tangent = {true, kPi / 2.0};
    rect.end_tangent = {true, kPi / 2.0};
    rect.total_length = arch.length;

    {
        const MinimizeReport r = minimize_elastica(rect, 256);
        add(&rep, "clamped-arch-converged", r.converged ? 0.0 : 1.0, 0.5,
            r.converged);
        add_below(&rep, "endpoint-constraint-error",
                  dist(r.curve.points.back(), rect.end), 1e-10);

        BoundaryConditions rot = rect;
        const double th = 0.7;
        rot.start = rotate(rect.start, th);
        rot.end = rotate(rect.end, th);
        rot.start_tangent.angle += th;
        rot.end_tangent.angle += th;
        const MinimizeReport r2 = minimize_elastica(rot, 256);
        add_below(&rep, "rigid-motion-equivariance",
                  std::abs(r.energy - r2.energy) / std::max(1.0, r.energy), 1e-10);
    }

    {
        double e[3];
        const std::size_t ns[3] = {128, 256, 512};
        for (int i = 0; i < 3; ++i)
            e[i] = minimize_elastica(rect, ns[i]).energy;
        const double order = std::log2(std::abs((e[0] - e[1]) / (e[1] - e[2])));
        add(&rep, "mesh-convergence-order(min)", order, 1.9, order >= 1.9);
    }

    return rep;
}

}  // namespace

std::vector<std::string> verification_suite_names() {
    return {"curve-core", "quadrature", "euler-chain", "ode", "gp-flow",
            "minimizer"};
}

SuiteReport run_verification_suite(const std::string& name) {
    if (name == "curve-core") return suite_curve_core();
    if (name == "quadrature") return suite_quadrature();
    if (name == "euler-chain") return suite_euler_chain();
    if (name == "ode") return suite_ode();
    if (name == "gp-flow") return suite_gp_flow();
    if (name == "minimizer") return suite_minimizer();
    if (name == "all") {
        SuiteReport all{"all", {}, true};
        for (const std::string& s : verification_suite_names()) {
            SuiteReport r = run_verification_suite(s);
            for (CheckResult& c : r.checks) {
                c.name = s + "/" + c.name;
                all.checks.push_back(std::move(c));
            }
            all.pass = all.pass && r.pass;
        }
        return all;
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace elastica
