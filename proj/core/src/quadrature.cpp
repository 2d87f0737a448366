#include "elastica/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

// 20-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P20.
struct GaussLegendre {
    std::array<double, 20> node{};
    std::array<double, 20> weight{};
    GaussLegendre() {
        const int n = 20;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre& gl20() {
    static const GaussLegendre rule;
    return rule;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int panels = 1) {
    const auto& rule = gl20();
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + (b - a) * p / panels;
        const double hi = a + (b - a) * (p + 1) / panels;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int i = 0; i < 20; ++i)
            acc += rule.weight[i] * f(mid + half * rule.node[i]);
        total += acc * half;
    }
    return total;
}

double phi_of(const ElasticaParams& p, double x) {
    return p.alpha + x * (p.beta + x * p.gamma);
}
double dphi_of(const ElasticaParams& p, double x) {
    return p.beta + 2.0 * p.gamma * x;
}

// Stable real roots of c2 x^2 + c1 x + c0 = 0, appended to out.
void quadratic_roots(double c2, double c1, double c0, std::vector<double>* out) {
    if (c2 == 0.0) {
        if (c1 != 0.0) out->push_back(-c0 / c1);
        return;
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
    if (q != 0.0) {
        out->push_back(q / c2);
        out->push_back(c0 / q);
    } else {
        out->push_back(0.0);
        if (c2 != 0.0) out->push_back(-c1 / c2);
    }
}

struct Endpoint {
    bool singular = false;
    double root = 0.0;  // snapped turning point when singular
    double sigma = 0.0; // sign of Phi at the root (+1 or -1)
};

// Map tau in [0,1] to x in [lo,hi] with sqrt clustering at singular ends.
struct ParamMap {
    double lo, hi, mid;
    bool sing_lo, sing_hi;

    double x_of(double tau) const {
        if (tau <= 0.5) {
            const double u = 2.0 * tau;
            return sing_lo ? lo + (mid - lo) * u * u : lo + (mid - lo) * u;
        }
        const double u = 2.0 * (1.0 - tau);
        return sing_hi ? hi - (hi - mid) * u * u : hi - (hi - mid) * u;
    }
    double dx_dtau(double tau) const {
        if (tau <= 0.5) {
            const double u = 2.0 * tau;
            return sing_lo ? 4.0 * (mid - lo) * u : 2.0 * (mid - lo);
        }
        const double u = 2.0 * (1.0 - tau);
        return sing_hi ? 4.0 * (hi - mid) * u : 2.0 * (hi - mid);
    }
};

}  // namespace

void validate_params(const ElasticaParams& p) {
    if (p.a == 0.0 || !std::isfinite(p.a))
        throw std::invalid_argument("ElasticaParams: a must be nonzero finite");
    for (double v : {p.alpha, p.beta, p.gamma})
        if (!std::isfinite(v))
            throw std::invalid_argument("ElasticaParams: non-finite parameter");
    const double A = std::abs(p.a);
    if (p.gamma != 0.0) {
        const double ext = p.alpha - p.beta * p.beta / (4.0 * p.gamma);
        // Phi is a parabola: it attains ext and runs to +-infinity, so the
        // closure is nonempty iff the extremum is not beyond a in the
        // parabola's open direction.
        const double toward_inf = (p.gamma > 0.0) ? ext : -ext;
        if (toward_inf > A * (1.0 + 1e-12))
            throw std::invalid_argument(
                "ElasticaParams: admissible domain |Phi| < |a| is empty");
        return;
    }
    if (p.beta != 0.0) return;  // Phi linear, hits every value
    if (std::abs(p.alpha) > A * (1.0 + 1e-12))
        throw std::invalid_argument(
            "ElasticaParams: admissible domain |Phi| < |a| is empty");
}

std::pair<double, double> euler_mn_to_normalized(double m, double n, double a) {
    if (a == 0.0) throw std::invalid_argument("euler_mn_to_normalized: a = 0");
    return {4.0 * m / (a * a), 4.0 * n / (a * a)};
}

std::vector<double> turning_points(const ElasticaParams& p) {
    validate_params(p);
    std::vector<double> roots;
    quadratic_roots(p.gamma, p.beta, p.alpha - p.a, &roots);
    quadratic_roots(p.gamma, p.beta, p.alpha + p.a, &roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

double trace_curvature(const ElasticaParams& p, double x) {
    return dphi_of(p, x) / std::abs(p.a);
}

ShapeTrace elastica_integrals(const ElasticaParams& p, double x0, double x1,
                              std::size_t n) {
    validate_params(p);
    if (n < 2) throw std::invalid_argument("elastica_integrals: n >= 2 required");
    if (!(x0 <= x1))
        throw std::invalid_argument("elastica_integrals: requires x0 <= x1");

    ShapeTrace out;
    out.x.resize(n);
    out.s.assign(n, 0.0);
    out.y.assign(n, 0.0);
    if (x1 == x0) {
        std::fill(out.x.begin(), out.x.end(), x0);
        return out;
    }

    const double A = std::abs(p.a);
    const double span = x1 - x0;
    const std::vector<double> roots = turning_points(p);

    // No turning point may sit strictly inside the interval.
    for (double r : roots) {
        if (r > x0 + 1e-12 * span && r < x1 - 1e-12 * span)
            throw std::invalid_argument(
                "elastica_integrals: interval exits the admissible domain at x = " +
                std::to_string(r));
    }

    auto probe_endpoint = [&](double xe) -> Endpoint {
        Endpoint e;
        const double phi = phi_of(p, xe);
        if (std::abs(phi) > A * (1.0 + 1e-9))
            throw std::invalid_argument(
                "elastica_integrals: endpoint outside admissible closure at x = " +
                std::to_string(xe));
        if (A - std::abs(phi) < 1e-9 * A) {
            // Snap to the nearest turning root.
            double best = xe, bd = std::numeric_limits<double>::max();
            for (double r : roots) {
                if (std::abs(r - xe) < bd) {
                    bd = std::abs(r - xe);
                    best = r;
                }
            }
            e.singular = true;
            e.root = best;
            e.sigma = phi_of(p, best) >= 0.0 ? 1.0 : -1.0;
        }
        return e;
    };
    const Endpoint el = probe_endpoint(x0);
    const Endpoint er = probe_endpoint(x1);

    ParamMap map{el.singular ? el.root : x0, er.singular ? er.root : x1, 0.0,
                 el.singular, er.singular};
    map.mid = 0.5 * (map.lo + map.hi);

    // Integrands against tau; on singular halves the vanishing radicand
    // factor (A - sigma*Phi) = xi^2 * g is divided out analytically, so with
    // dx/dtau proportional to xi the quotient is regular:
    //   fs dtau = 4 A sqrt(halfwidth) / sqrt(g (A + sigma Phi)) dtau.
    auto integrands = [&](double tau, double* fs, double* fy) {
        const double x = map.x_of(tau);
        const double phi = phi_of(p, x);
        const bool left_sing = tau <= 0.5 && el.singular;
        const bool right_sing = tau > 0.5 && er.singular;
        if (left_sing || right_sing) {
            const Endpoint& e = left_sing ? el : er;
            const double halfwidth = left_sing ? map.mid - map.lo : map.hi - map.mid;
            const double xi2 = std::abs(x - e.root);
            const double g = (left_sing ? -1.0 : 1.0) * e.sigma * dphi_of(p, e.root) -
                             e.sigma * p.gamma * xi2;
            const double other = A + e.sigma * phi;
            if (g <= 0.0 || other <= 0.0)
                throw std::invalid_argument(
                    "elastica_integrals: interval exits the admissible domain at x = " +
                    std::to_string(x));
            *fs = 4.0 * A * std::sqrt(halfwidth) / std::sqrt(g * other);
            *fy = *fs * phi / A;
            return;
        }
        const double rad = (A - phi) * (A + phi);
        if (rad <= 0.0)
            throw std::invalid_argument(
                "elastica_integrals: interval exits the admissible domain at x = " +
                std::to_string(x));
        *fs = A * map.dx_dtau(tau) / std::sqrt(rad);
        *fy = *fs * phi / A;
    };

    const auto& rule = gl20();
    double s_acc = 0.0, y_acc = 0.0;
    out.x[0] = map.x_of(0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double t0 = static_cast<double>(j) / (n - 1);
        const double t1 = static_cast<double>(j + 1) / (n - 1);
        // Split panels straddling tau = 0.5 so each side uses its own branch.
        std::array<std::pair<double, double>, 2> parts{{{t0, t1}, {0.0, 0.0}}};
        int nparts = 1;
        if (t0 < 0.5 && t1 > 0.5) {
            parts[0] = {t0, 0.5};
            parts[1] = {0.5, t1};
            nparts = 2;
        }
        for (int q = 0; q < nparts; ++q) {
            const double mid = 0.5 * (parts[q].first + parts[q].second);
            const double half = 0.5 * (parts[q].second - parts[q].first);
            for (int i = 0; i < 20; ++i) {
                double fs, fy;
                integrands(mid + half * rule.node[i], &fs, &fy);
                s_acc += rule.weight[i] * half * fs;
                y_acc += rule.weight[i] * half * fy;
            }
        }
        out.x[j + 1] = map.x_of(t1);
        out.s[j + 1] = s_acc;
        out.y[j + 1] = y_acc;
    }
    return out;
}

NormalizedTrace euler_normalized_trace(double alpha, double beta, double x0,
                                       double x1, std::size_t n) {
    // beta arises as the norm of the rotated multiplier pair, hence > 0.
    if (!(beta > 0.0))
        throw std::invalid_argument("euler_normalized_trace: beta must be positive");
    NormalizedTrace out;
    out.equivalent = ElasticaParams{-4.0 * alpha, 0.0, beta * beta, 4.0 * beta};
    validate_params(out.equivalent);
    out.trace = elastica_integrals(out.equivalent, x0, x1, n);
    return out;
}

NormalizedForm normalize_params(const ElasticaParams& p) {
    validate_params(p);
    ElasticaParams q = p;
    if (q.gamma == 0.0)
        throw std::invalid_argument(
            "normalize_params: gamma = 0 (constant curvature) has no normalized form");
    if (q.gamma < 0.0) {
        // Flip the arbitrary constants' signs; the trace mirrors in y only.
        q.alpha = -q.alpha;
        q.beta = -q.beta;
        q.gamma = -q.gamma;
    }
    NormalizedForm f;
    f.shift = -q.beta / (2.0 * q.gamma);
    const double c0 = q.alpha - q.beta * q.beta / (4.0 * q.gamma);
    const double A = std::abs(q.a);
    f.beta = 4.0 * q.gamma / A;
    f.alpha = -4.0 * q.gamma * c0 / (q.a * q.a);
    return f;
}

double lemniscatic_integral(double w) {
    if (!(std::abs(w) <= 1.0 + 1e-15))
        throw std::invalid_argument("lemniscatic_integral: |w| <= 1 required");
    const double aw = std::min(std::abs(w), 1.0);
    const double split = 0.9;
    double val = 0.0;
    auto f = [](double t) { return 1.0 / std::sqrt((1.0 - t * t) * (1.0 + t * t)); };
    if (aw <= split) {
        val = gl_integrate(f, 0.0, aw, 8);
    } else {
        val = gl_integrate(f, 0.0, split, 8);
        // t = 1 - xi^2 removes the endpoint singularity.
        auto g = [](double xi) {
            const double t = 1.0 - xi * xi;
            return 2.0 / std::sqrt((1.0 + t) * (1.0 + t * t));
        };
        val += gl_integrate(g, std::sqrt(1.0 - aw), std::sqrt(1.0 - split), 8);
    }
    return w < 0.0 ? -val : val;
}

double complete_elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::invalid_argument("complete_elliptic_K: k in [0,1) required");
    return gl_integrate(
        [k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); },
        0.0, kPi / 2.0, 8);
}

double complete_elliptic_E(double k) {
    if (!(k >= 0.0 && k <= 1.0))
        throw std::invalid_argument("complete_elliptic_E: k in [0,1] required");
    return gl_integrate(
        [k](double t) { return std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); },
        0.0, kPi / 2.0, 8);
}

const char* to_string(Species s) {
    switch (s) {
        case Species::straight_line: return "straight-line";
        case Species::sinusoidal_small_amplitude: return "sinusoidal-small-amplitude";
        case Species::inflectional: return "inflectional";
        case Species::rectangular: return "rectangular";
        case Species::lemniscoid: return "lemniscoid";
        case Species::solitary: return "solitary";
        case Species::non_inflectional: return "non-inflectional";
        case Species::circle: return "circle";
    }
    return "unknown";
}

namespace {

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double tol) {
    double fa = f(a), fb = f(b);
    if (fa * fb > 0.0) throw std::runtime_error("bisect_root: no sign change");
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fa * fm <= 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Tangent swing of the inflectional oscillation at modulus k.
double tangent_swing(double k) { return 4.0 * std::asin(std::min(k, 1.0)); }

// Net drift along the mean axis per oscillation period, up to a positive
// factor: vanishes exactly for the figure-eight species.
double closure_defect(double k) {
    return gl_integrate(
        [k](double t) {
            const double s2 = std::sin(t) * std::sin(t);
            return (1.0 - 2.0 * k * k * s2) / std::sqrt(1.0 - k * k * s2);
        },
        0.0, kPi / 2.0, 8);
}

}  // namespace

double rectangular_modulus() {
    static const double k =
        bisect_root([](double k) { return tangent_swing(k) - kPi; }, 0.1, 0.99, 1e-12);
    return k;
}

double lemniscoid_modulus() {
    static const double k = bisect_root(closure_defect, rectangular_modulus() + 1e-3,
                                       0.9999, 1e-12);
    return k;
}

SpeciesLabel classify_species(const ElasticaParams& p) {
    validate_params(p);
    SpeciesLabel out;
    if (p.gamma == 0.0) {
        out.tag = (p.beta == 0.0) ? Species::straight_line : Species::circle;
        out.modulus = 0.0;
        return out;
    }
    const double h = (p.beta * p.beta - 4.0 * p.alpha * p.gamma) /
                     (4.0 * std::abs(p.gamma * p.a));
    const double k2 = 0.5 * (h + 1.0);
    if (k2 <= 1e-12) {
        out.tag = Species::circle;
        out.modulus = 0.0;
        return out;
    }
    const double k = std::sqrt(k2);
    const double window = 1e-6;
    if (std::abs(k - rectangular_modulus()) <= window) {
        out.tag = Species::rectangular;
        out.modulus = k;
    } else if (std::abs(k - lemniscoid_modulus()) <= window) {
        out.tag = Species::lemniscoid;
        out.modulus = k;
    } else if (std::abs(k - 1.0) <= window) {
        out.tag = Species::solitary;
        out.modulus = 1.0;
    } else if (k > 1.0) {
        out.tag = Species::non_inflectional;
        out.modulus = 1.0 / k;
    } else if (k < 0.1) {
        out.tag = Species::sinusoidal_small_amplitude;
        out.modulus = k;
    } else {
        out.tag = Species::inflectional;
        out.modulus = k;
    }
    return out;
}

}  // namespace elastica
