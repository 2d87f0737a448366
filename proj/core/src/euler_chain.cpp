#include "elastica/euler_chain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "elastica/curve.hpp"

namespace elastica {

namespace {

double radicand_W(double p, const Multipliers& m) {
    return m.alpha * std::sqrt(1.0 + p * p) + m.beta * p + m.gamma;
}

// 20-point Gauss-Legendre on [-1,1] (same rule as the quadrature module;
// regenerated locally to keep the modules uncoupled).
struct GL20 {
    std::array<double, 20> node{}, weight{};
    GL20() {
        constexpr int n = 20;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
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

PQZ coefficients_PQZ(SlopeState s) {
    if (!std::isfinite(s.p) || !std::isfinite(s.q))
        throw std::invalid_argument("coefficients_PQZ: non-finite state");
    const double w = 1.0 + s.p * s.p;
    const double w52 = std::pow(w, 2.5);
    PQZ out;
    out.Z = s.q * s.q / w52;
    out.P = -5.0 * s.p * s.q * s.q / (w52 * w);
    out.Q = 2.0 * s.q / w52;
    return out;
}

double lagrangian_density(SlopeState s, const Multipliers& m) {
    const double w = 1.0 + s.p * s.p;
    return s.q * s.q / std::pow(w, 2.5) - m.alpha * std::sqrt(w) - m.beta * s.p;
}

SampledResidual euler_lagrange_residual(std::span<const double> p, double dx,
                                        const Multipliers& m) {
    const std::size_t n = p.size();
    if (n < 16)
        throw std::invalid_argument("euler_lagrange_residual: >= 16 samples required");
    if (!(dx > 0.0))
        throw std::invalid_argument("euler_lagrange_residual: dx must be positive");
    std::vector<double> g(n, 0.0);  // 2 q / (1+p^2)^{5/2} at interior nodes
    std::vector<double> q(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        q[i] = (p[i + 1] - p[i - 1]) / (2.0 * dx);
        g[i] = 2.0 * q[i] / std::pow(1.0 + p[i] * p[i], 2.5);
    }
    SampledResidual out;
    out.first_index = 2;
    out.values.resize(n - 4);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double w = 1.0 + p[i] * p[i];
        const double dg = (g[i + 1] - g[i - 1]) / (2.0 * dx);
        out.values[i - 2] = -5.0 * p[i] * q[i] * q[i] / std::pow(w, 3.5) -
                            m.alpha * p[i] / std::sqrt(w) - dg - m.beta;
    }
    return out;
}

double noether_current(SlopeState s, const Multipliers& m) {
    const double w = 1.0 + s.p * s.p;
    return s.q * s.q / std::pow(w, 2.5) + m.alpha * std::sqrt(w) + m.beta * s.p;
}

double quadrature_identity_deviation(std::span<const double> p_grid,
                                     const Multipliers& m) {
    const std::size_t n = p_grid.size();
    if (n < 3)
        throw std::invalid_argument("quadrature_identity_deviation: grid too short");
    const double dp = p_grid[1] - p_grid[0];
    std::vector<double> G(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = p_grid[i];
        const double W = radicand_W(p, m);
        if (!(W > 0.0))
            throw std::invalid_argument(
                "quadrature_identity_deviation: radicand nonpositive at p = " +
                std::to_string(p));
        G[i] = 2.0 * std::sqrt(W) / std::pow(1.0 + p * p, 0.25);
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double p = p_grid[i];
        const double W = radicand_W(p, m);
        const double lhs = (G[i + 1] - G[i - 1]) / (2.0 * dp);
        const double rhs =
            (m.beta - m.gamma * p) / (std::pow(1.0 + p * p, 1.25) * std::sqrt(W));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

RotationReduction rotation_reduce(double beta, double gamma) {
    if (beta == 0.0 && gamma == 0.0)
        throw std::invalid_argument("rotation_reduce: zero (beta, gamma)");
    return {std::hypot(beta, gamma), std::atan2(gamma, beta)};
}

PChartTrace euler_p_trace(const Multipliers& m, std::span<const double> p_nodes) {
    const std::size_t n = p_nodes.size();
    if (n < 2) throw std::invalid_argument("euler_p_trace: needs >= 2 nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(p_nodes[i] > p_nodes[i - 1]))
            throw std::invalid_argument("euler_p_trace: p-nodes must increase");

    auto dxdp = [&](double p) {
        const double W = radicand_W(p, m);
        if (!(W > 0.0))
            throw std::invalid_argument("euler_p_trace: radicand nonpositive at p = " +
                                        std::to_string(p));
        return 1.0 / (std::pow(1.0 + p * p, 1.25) * std::sqrt(W));
    };

    PChartTrace out;
    out.p.assign(p_nodes.begin(), p_nodes.end());
    out.x.assign(n, 0.0);
    out.y.assign(n, 0.0);
    const auto& rule = gl();
    double xs = 0.0, ys = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double mid = 0.5 * (p_nodes[j] + p_nodes[j + 1]);
        const double half = 0.5 * (p_nodes[j + 1] - p_nodes[j]);
        for (int i = 0; i < 20; ++i) {
            const double p = mid + half * rule.node[i];
            const double f = dxdp(p) * rule.weight[i] * half;
            xs += f;
            ys += p * f;
        }
        out.x[j + 1] = xs;
        out.y[j + 1] = ys;
    }
    return out;
}

double kappa_x_relation(const ShapeTrace& trace, double beta) {
    const std::size_t n = trace.x.size();
    if (n < 16) throw std::invalid_argument("kappa_x_relation: trace too short");
    // Measured curvature from the trace geometry: unwrapped chord angles
    // differenced against chord-midpoint arclength (centered, second order
    // on the smoothly graded sample grid).
    std::vector<double> theta(n - 1), mid(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double raw = std::atan2(trace.y[i + 1] - trace.y[i],
                                      trace.x[i + 1] - trace.x[i]);
        if (i == 0) {
            theta[i] = raw;
        } else {
            double d = raw - theta[i - 1];
            while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
            while (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
            theta[i] = theta[i - 1] + d;
        }
        mid[i] = 0.5 * (trace.s[i] + trace.s[i + 1]);
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double kappa = (theta[i] - theta[i - 1]) / (mid[i] - mid[i - 1]);
        worst = std::max(worst, std::abs(kappa - 0.5 * beta * trace.x[i]));
    }
    return worst;
}

}  // namespace elastica
