#include "elastica/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

// One classical RK4 step for a second-order system y'' = f(y, s).
template <typename F>
void rk4_step(double& y, double& v, double s, double h, F&& acc) {
    const double k1y = v, k1v = acc(y, s);
    const double k2y = v + 0.5 * h * k1v, k2v = acc(y + 0.5 * h * k1y, s + 0.5 * h);
    const double k3y = v + 0.5 * h * k2v, k3v = acc(y + 0.5 * h * k2y, s + 0.5 * h);
    const double k4y = v + h * k3v, k4v = acc(y + h * k3y, s + h);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

struct GL20 {
    std::array<double, 20> node{}, weight{};
    GL20() {
        constexpr int n = 20;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GL20& gl() {
    static const GL20 rule;
    return rule;
}

}  // namespace

double pendulum_first_integral(PendulumParams p, double phi, double dphi) {
    return 0.5 * dphi * dphi + p.A * std::sin(phi) - p.B * std::cos(phi);
}

double smkdv_first_integral(double a, double kappa, double dkappa) {
    return 0.5 * dkappa * dkappa + 0.125 * std::pow(kappa, 4) +
           0.5 * a * kappa * kappa;
}

PendulumParams LagrangeParams::to_gauss() const {
    if (K == 0.0) throw std::invalid_argument("LagrangeParams: K must be nonzero");
    return {-N / (2.0 * K * K), -P / (2.0 * K * K)};
}

double LagrangeParams::implied_dphi(double phi) const {
    const double R = M * M * c * c / (4.0 * K * K) + P * (1.0 - std::cos(phi)) +
                     N * std::sin(phi);
    if (!(R > 0.0))
        throw std::invalid_argument("LagrangeParams: nonpositive radicand");
    return std::sqrt(R) / std::abs(K);
}

PendulumSolution solve_static_sine_gordon(PendulumParams p, PendulumState init,
                                          double length, std::size_t n) {
    if (n < 64)
        throw std::invalid_argument("solve_static_sine_gordon: n >= 64 required");
    if (!(length > 0.0))
        throw std::invalid_argument("solve_static_sine_gordon: length must be positive");
    PendulumSolution out;
    out.ds = length / static_cast<double>(n);
    out.params = p;
    out.phi.resize(n + 1);
    out.dphi.resize(n + 1);
    double phi = init.phi, v = init.dphi;
    out.phi[0] = phi;
    out.dphi[0] = v;
    auto acc = [&p](double y, double) {
        return -p.A * std::cos(y) - p.B * std::sin(y);
    };
    for (std::size_t i = 0; i < n; ++i) {
        rk4_step(phi, v, i * out.ds, out.ds, acc);
        out.phi[i + 1] = phi;
        out.dphi[i + 1] = v;
    }
    return out;
}

SMKdVSolution solve_smkdv(SMKdVParams p, double length, std::size_t n) {
    if (n < 64) throw std::invalid_argument("solve_smkdv: n >= 64 required");
    if (!(length > 0.0))
        throw std::invalid_argument("solve_smkdv: length must be positive");
    SMKdVSolution out;
    out.a = p.a;
    out.profile.ds = length / static_cast<double>(n);
    out.profile.periodic = false;
    out.profile.kappa.resize(n + 1);
    out.dkappa.resize(n + 1);
    double k = p.kappa0, v = p.dkappa0;
    out.profile.kappa[0] = k;
    out.dkappa[0] = v;
    auto acc = [&p](double y, double) { return -p.a * y - 0.5 * y * y * y; };
    for (std::size_t i = 0; i < n; ++i) {
        rk4_step(k, v, i * out.profile.ds, out.profile.ds, acc);
        out.profile.kappa[i + 1] = k;
        out.dkappa[i + 1] = v;
    }
    return out;
}

CrossCheck cross_check_formulations(const PendulumSolution& sol) {
    const std::size_t n = sol.dphi.size();
    if (n < 16)
        throw std::invalid_argument("cross_check_formulations: trajectory too short");
    const double h = sol.ds;
    const std::vector<double>& k = sol.dphi;

    CrossCheck out;
    double kmax = 0.0;
    for (double v : k) kmax = std::max(kmax, std::abs(v));
    if (kmax * h * static_cast<double>(n) < 1e-9) {
        out.degenerate = true;
        return out;
    }

    // Least squares of kappa'' + kappa^3/2 = -a kappa over interior nodes.
    double num = 0.0, den = 0.0;
    std::vector<double> lhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double kpp = (k[i + 1] - 2.0 * k[i] + k[i - 1]) / (h * h);
        lhs[i] = kpp + 0.5 * k[i] * k[i] * k[i];
        num += k[i] * lhs[i];
        den += k[i] * k[i];
    }
    out.a_fit = -num / den;
    for (std::size_t i = 1; i + 1 < n; ++i)
        out.residual_norm =
            std::max(out.residual_norm, std::abs(lhs[i] + out.a_fit * k[i]));
    return out;
}

LagrangeTrace lagrange_integrals(const LagrangeParams& p, double phi0,
                                 double phi1, std::size_t n) {
    if (n < 2) throw std::invalid_argument("lagrange_integrals: n >= 2 required");
    if (!(phi1 > phi0))
        throw std::invalid_argument("lagrange_integrals: requires phi0 < phi1");
    if (p.K == 0.0) throw std::invalid_argument("lagrange_integrals: K = 0");

    auto radicand = [&p](double phi) {
        return p.M * p.M * p.c * p.c / (4.0 * p.K * p.K) +
               p.P * (1.0 - std::cos(phi)) + p.N * std::sin(phi);
    };

    LagrangeTrace out;
    out.phi.resize(n);
    out.s.assign(n, 0.0);
    out.x.assign(n, 0.0);
    out.y.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        out.phi[i] = phi0 + (phi1 - phi0) * static_cast<double>(i) /
                                static_cast<double>(n - 1);

    const auto& rule = gl();
    const double Kabs = std::abs(p.K);
    double s = 0.0, x = 0.0, y = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double mid = 0.5 * (out.phi[j] + out.phi[j + 1]);
        const double half = 0.5 * (out.phi[j + 1] - out.phi[j]);
        for (int i = 0; i < 20; ++i) {
            const double phi = mid + half * rule.node[i];
            const double R = radicand(phi);
            if (!(R > 0.0))
                throw std::invalid_argument(
                    "lagrange_integrals: nonpositive radicand at phi = " +
                    std::to_string(phi));
            const double w = rule.weight[i] * half * Kabs / std::sqrt(R);
            s += w;
            x += w * std::cos(phi);
            y += w * std::sin(phi);
        }
        out.s[j + 1] = s;
        out.x[j + 1] = x;
        out.y[j + 1] = y;
    }
    return out;
}

PeriodicOrbit smkdv_periodic_orbit(double a, double kappa0, std::size_t N) {
    if (N < 32) throw std::invalid_argument("smkdv_periodic_orbit: N >= 32 required");
    auto V = [a](double k) { return 0.125 * k * k * k * k + 0.5 * a * k * k; };
    auto dV = [a](double k) { return 0.5 * k * k * k + a * k; };
    const double E = V(kappa0);
    const double slope = dV(kappa0);
    if (std::abs(slope) < 1e-12)
        throw std::invalid_argument(
            "smkdv_periodic_orbit: kappa0 is an equilibrium, no oscillation");

    // Bracket and bisect the other turning point in the direction of motion.
    const double dir = slope > 0.0 ? -1.0 : 1.0;
    double step = std::max(0.1, 0.1 * std::abs(kappa0));
    double prev = kappa0 + dir * 1e-9;
    double probe = prev;
    bool found = false;
    for (int it = 0; it < 400; ++it) {
        probe = prev + dir * step;
        if (V(probe) >= E) {
            found = true;
            break;
        }
        prev = probe;
    }
    if (!found)
        throw std::invalid_argument("smkdv_periodic_orbit: orbit is not bounded");
    double lo = std::min(prev, probe), hi = std::max(prev, probe);
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (lo + hi);
        if ((V(m) - E > 0.0) == (V(hi) - E > 0.0))
            hi = m;
        else
            lo = m;
        if (hi - lo < 1e-15 * (1.0 + std::abs(kappa0))) break;
    }
    const double kappa1 = 0.5 * (lo + hi);
    const double klo = std::min(kappa0, kappa1), khi = std::max(kappa0, kappa1);

    // E - V factors as (khi - k)(k - klo) h(k)/8 with
    // h(k) = k^2 + u k + (u^2 + 4a - v), u = khi + klo, v = khi klo;
    // substituting k = mid - amp cos(theta) gives T = 4 int_0^pi dtheta/sqrt(h).
    const double u = khi + klo, v = khi * klo;
    const double w = u * u + 4.0 * a - v;
    const double mid = 0.5 * (khi + klo), amp = 0.5 * (khi - klo);
    const auto& rule = gl();
    double T = 0.0;
    const int panels = 8;
    for (int q = 0; q < panels; ++q) {
        const double t0 = kPi * q / panels, t1 = kPi * (q + 1) / panels;
        const double tm = 0.5 * (t0 + t1), th = 0.5 * (t1 - t0);
        for (int i = 0; i < 20; ++i) {
            const double theta = tm + th * rule.node[i];
            const double k = mid - amp * std::cos(theta);
            const double hval = k * k + u * k + w;
            T += rule.weight[i] * th * 4.0 / std::sqrt(hval);
        }
    }

    // Sample one period by RK4 with oversampling.
    PeriodicOrbit out;
    out.period = T;
    out.kappa.resize(N);
    const std::size_t oversample = 64;
    const double h = T / static_cast<double>(N * oversample);
    double k = kappa0, dk = 0.0;
    auto acc = [a](double y, double) { return -a * y - 0.5 * y * y * y; };
    for (std::size_t i = 0; i < N; ++i) {
        out.kappa[i] = k;
        for (std::size_t j = 0; j < oversample; ++j)
            rk4_step(k, dk, 0.0, h, acc);
    }
    return out;
}

}  // namespace elastica
