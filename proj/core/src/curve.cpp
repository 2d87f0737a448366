#include "elastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

// Nearest-branch angle difference in (-pi, pi].
double wrap_angle(double d) {
    while (d > kPi) d -= 2.0 * kPi;
    while (d <= -kPi) d += 2.0 * kPi;
    return d;
}

// Unwrapped chord directions theta_{i+1/2}; size = segment_count().
std::vector<double> chord_angles(const PlanarCurve& c) {
    const auto& p = c.points;
    const std::size_t m = c.segment_count();
    std::vector<double> theta(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 d = p[(i + 1) % p.size()] - p[i];
        const double raw = std::atan2(d.y, d.x);
        if (i == 0) {
            theta[0] = raw;
        } else {
            theta[i] = theta[i - 1] + wrap_angle(raw - theta[i - 1]);
        }
    }
    return theta;
}

// Cubic (4-point) interpolation of a grid function at the midpoint between
// nodes i and i+1; falls back to shifted stencils at open ends.
double midpoint_value(const std::vector<double>& f, std::size_t i,
                      bool periodic) {
    const std::size_t n = f.size();
    auto at = [&](long j) -> double {
        if (periodic) {
            long m = j % static_cast<long>(n);
            if (m < 0) m += static_cast<long>(n);
            return f[static_cast<std::size_t>(m)];
        }
        j = std::clamp<long>(j, 0, static_cast<long>(n) - 1);
        return f[static_cast<std::size_t>(j)];
    };
    const long k = static_cast<long>(i);
    if (!periodic && (i == 0 || i + 2 >= n)) {
        // One-sided cubic through the four nearest nodes.
        const long base = (i == 0) ? 0 : static_cast<long>(n) - 4;
        const double t = static_cast<double>(k - base) + 0.5;
        const double f0 = at(base), f1 = at(base + 1), f2 = at(base + 2),
                     f3 = at(base + 3);
        // Newton form on unit-spaced nodes 0,1,2,3.
        const double d1 = f1 - f0;
        const double d2 = f2 - 2.0 * f1 + f0;
        const double d3 = f3 - 3.0 * f2 + 3.0 * f1 - f0;
        return f0 + d1 * t + d2 * t * (t - 1.0) / 2.0 +
               d3 * t * (t - 1.0) * (t - 2.0) / 6.0;
    }
    return (-at(k - 1) + 9.0 * at(k) + 9.0 * at(k + 1) - at(k + 2)) / 16.0;
}

}  // namespace

double norm(Vec2 a) { return std::hypot(a.x, a.y); }
double dist(Vec2 a, Vec2 b) { return norm(a - b); }

Vec2 rotate(Vec2 a, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

void validate_curve(const PlanarCurve& c) {
    if (c.points.size() < 8)
        throw std::invalid_argument("PlanarCurve: needs at least 8 points");
    if (!(c.ds > 0.0))
        throw std::invalid_argument("PlanarCurve: ds must be positive");
    const std::size_t m = c.segment_count();
    for (std::size_t i = 0; i < m; ++i) {
        const double len = dist(c.points[(i + 1) % c.points.size()], c.points[i]);
        if (std::abs(len - c.ds) > 1e-6 * c.ds)
            throw std::invalid_argument(
                "PlanarCurve: segment " + std::to_string(i) +
                " length deviates from ds by more than 1e-6 relative");
    }
}

PlanarCurve make_curve(std::vector<Vec2> points, bool closed) {
    PlanarCurve c;
    c.points = std::move(points);
    c.closed = closed;
    if (c.points.size() < 2)
        throw std::invalid_argument("make_curve: needs at least 2 points");
    double total = 0.0;
    const std::size_t m = c.segment_count();
    for (std::size_t i = 0; i < m; ++i)
        total += dist(c.points[(i + 1) % c.points.size()], c.points[i]);
    c.ds = total / static_cast<double>(m);
    validate_curve(c);
    return c;
}

TangentAngle tangent_angle_of(const PlanarCurve& c) {
    validate_curve(c);
    const std::vector<double> theta = chord_angles(c);
    const std::size_t n = c.points.size();
    TangentAngle t;
    t.phi.resize(n);
    if (c.closed) {
        for (std::size_t i = 0; i < n; ++i) {
            const double prev = (i == 0)
                                    ? theta.back() - 2.0 * kPi *
                                          std::round((theta.back() - theta[0]) /
                                                     (2.0 * kPi))
                                    : theta[i - 1];
            t.phi[i] = 0.5 * (prev + theta[i]);
        }
        // Re-unwrap after averaging.
        for (std::size_t i = 1; i < n; ++i)
            t.phi[i] = t.phi[i - 1] + wrap_angle(t.phi[i] - t.phi[i - 1]);
    } else {
        t.phi[0] = theta[0];
        for (std::size_t i = 1; i + 1 < n; ++i)
            t.phi[i] = 0.5 * (theta[i - 1] + theta[i]);
        t.phi[n - 1] = theta[n - 2];
    }
    return t;
}

CurvatureProfile curvature_of(const PlanarCurve& c) {
    validate_curve(c);
    for (std::size_t i = 0; i < c.segment_count(); ++i) {
        if (dist(c.points[(i + 1) % c.points.size()], c.points[i]) == 0.0)
            throw std::invalid_argument("curvature_of: degenerate segment");
    }
    const std::vector<double> theta = chord_angles(c);
    const std::size_t n = c.points.size();
    CurvatureProfile k;
    k.ds = c.ds;
    k.periodic = c.closed;
    k.kappa.resize(n);
    if (c.closed) {
        for (std::size_t i = 0; i < n; ++i) {
            const double a = theta[i];
            const double b = theta[(i + n - 1) % n];
            k.kappa[i] = wrap_angle(a - b) / c.ds;
        }
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i)
            k.kappa[i] = (theta[i] - theta[i - 1]) / c.ds;
        if (n >= 4) {
            k.kappa[0] = 2.0 * k.kappa[1] - k.kappa[2];
            k.kappa[n - 1] = 2.0 * k.kappa[n - 2] - k.kappa[n - 3];
        } else {
            k.kappa[0] = k.kappa[1];
            k.kappa[n - 1] = k.kappa[n - 2];
        }
    }
    return k;
}

ReconstructedCurve reconstruct_curve_detailed(const CurvatureProfile& profile,
                                              double x0, double y0,
                                              double phi0) {
    const std::size_t m = profile.kappa.size();
    if (m < 8)
        throw std::invalid_argument("reconstruct_curve: grid length >= 8 required");
    if (!(profile.ds > 0.0))
        throw std::invalid_argument("reconstruct_curve: ds must be positive");
    for (double v : profile.kappa)
        if (!std::isfinite(v))
            throw std::invalid_argument("reconstruct_curve: non-finite curvature");

    const double h = profile.ds;
    const std::size_t steps = profile.periodic ? m : m - 1;
    std::vector<double> phi(steps + 1);
    std::vector<Vec2> pts(steps + 1);
    phi[0] = phi0;
    pts[0] = {x0, y0};
    for (std::size_t i = 0; i < steps; ++i) {
        const double k0 = profile.kappa[i];
        const double k2 = profile.kappa[(i + 1) % m];
        const double k1 = midpoint_value(profile.kappa, i, profile.periodic);
        // RK4 for phi' = kappa(s), z' = e^{i phi}.
        const double p0 = phi[i];
        const double pa = p0 + 0.5 * h * k0;
        const double pb = p0 + 0.5 * h * k1;
        const double pc = p0 + h * k1;
        phi[i + 1] = p0 + h / 6.0 * (k0 + 4.0 * k1 + k2);
        const double dx = h / 6.0 * (std::cos(p0) + 2.0 * std::cos(pa) +
                                     2.0 * std::cos(pb) + std::cos(pc));
        const double dy = h / 6.0 * (std::sin(p0) + 2.0 * std::sin(pa) +
                                     2.0 * std::sin(pb) + std::sin(pc));
        pts[i + 1] = pts[i] + Vec2{dx, dy};
    }

    ReconstructedCurve out;
    out.phi = std::move(phi);
    bool closeable = false;
    if (profile.periodic) {
        const double gap = dist(pts.back(), pts.front());
        closeable = gap < 1e-6 * h;
    }
    if (closeable) {
        pts.pop_back();
        out.phi.pop_back();
        out.curve = make_curve(std::move(pts), true);
    } else {
        out.curve = make_curve(std::move(pts), false);
    }
    return out;
}

PlanarCurve reconstruct_curve(const CurvatureProfile& profile, double x0,
                              double y0, double phi0) {
    return reconstruct_curve_detailed(profile, x0, y0, phi0).curve;
}

PlanarCurve curve_from_tangent_angles(std::span<const double> phi, double ds,
                                      Vec2 start, bool periodic) {
    const std::size_t n = phi.size();
    if (n < 8) throw std::invalid_argument("curve_from_tangent_angles: too short");
    std::vector<double> f(phi.begin(), phi.end());
    const std::size_t steps = periodic ? n : n - 1;
    std::vector<Vec2> pts(steps + 1);
    pts[0] = start;
    for (std::size_t i = 0; i < steps; ++i) {
        const double p0 = f[i];
        const double p2 = f[(i + 1) % n];
        const double p1 = midpoint_value(f, i, periodic);
        const double dx = ds / 6.0 * (std::cos(p0) + 4.0 * std::cos(p1) + std::cos(p2));
        const double dy = ds / 6.0 * (std::sin(p0) + 4.0 * std::sin(p1) + std::sin(p2));
        pts[i + 1] = pts[i] + Vec2{dx, dy};
    }
    if (periodic && dist(pts.back(), pts.front()) < 1e-6 * ds) {
        pts.pop_back();
        return make_curve(std::move(pts), true);
    }
    return make_curve(std::move(pts), false);
}

double bending_energy(const PlanarCurve& c) {
    const CurvatureProfile k = curvature_of(c);
    const std::size_t n = k.kappa.size();
    double e = 0.0;
    if (c.closed) {
        for (double v : k.kappa) e += v * v;
        return e * c.ds;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        e += w * k.kappa[i] * k.kappa[i];
    }
    return e * c.ds;
}

namespace {

// Walks `target` along the polyline from (seg, t); returns false when the
// polyline ends first.
struct Walker {
    std::span<const Vec2> pts;
    bool closed;
    std::size_t seg = 0;   // current segment index
    double t = 0.0;        // position within segment, [0, 1)
    Vec2 pos;

    std::size_t nseg() const { return closed ? pts.size() : pts.size() - 1; }
    Vec2 seg_a(std::size_t s) const { return pts[s % pts.size()]; }
    Vec2 seg_b(std::size_t s) const { return pts[(s + 1) % pts.size()]; }

    // Advances to the next point at Euclidean distance c from `pos`.
    bool advance_chord(double c) {
        std::size_t s = seg;
        double tt = t;
        Vec2 p = pos;
        const std::size_t guard = 4 * pts.size() + 8;
        for (std::size_t it = 0; it < guard; ++it) {
            if (s >= nseg() && !closed) return false;
            const Vec2 a = seg_a(s), b = seg_b(s);
            const Vec2 d = b - a;
            const Vec2 rel = {a.x + tt * d.x - p.x, a.y + tt * d.y - p.y};
            // Solve |rel + u*d| = c for u >= 0 within the segment remainder.
            const double dd = d.x * d.x + d.y * d.y;
            const double rd = rel.x * d.x + rel.y * d.y;
            const double rr = rel.x * rel.x + rel.y * rel.y - c * c;
            const double disc = rd * rd - dd * rr;
            if (disc >= 0.0) {
                const double u = (-rd + std::sqrt(disc)) / dd;
                if (u >= 0.0 && tt + u <= 1.0 + 1e-15) {
                    seg = s;
                    t = std::min(tt + u, 1.0);
                    pos = {a.x + t * d.x, a.y + t * d.y};
                    if (t >= 1.0 - 1e-15) {
                        ++seg;
                        t = 0.0;
                        if (closed) seg %= nseg();
                    }
                    return true;
                }
            }
            ++s;
            if (closed) s %= nseg();
            tt = 0.0;
        }
        return false;
    }
};

double polyline_length(std::span<const Vec2> pts, bool closed) {
    double L = 0.0;
    const std::size_t m = closed ? pts.size() : pts.size() - 1;
    for (std::size_t i = 0; i < m; ++i) L += dist(pts[(i + 1) % pts.size()], pts[i]);
    return L;
}

}  // namespace

PlanarCurve resample_arclength(std::span<const Vec2> points, std::size_t n) {
    if (points.size() < 4)
        throw std::invalid_argument("resample_arclength: needs >= 4 input points");
    if (n < 8)
        throw std::invalid_argument("resample_arclength: needs n >= 8");
    std::vector<Vec2> in(points.begin(), points.end());
    double L0 = polyline_length(in, false);
    if (!(L0 > 0.0))
        throw std::invalid_argument("resample_arclength: zero total length");
    for (std::size_t i = 0; i + 1 < in.size(); ++i)
        if (dist(in[i], in[i + 1]) == 0.0)
            throw std::invalid_argument(
                "resample_arclength: duplicate consecutive points");

    bool closed = dist(in.front(), in.back()) < 1e-9 * L0;
    if (closed) {
        in.pop_back();
        if (in.size() < 3)
            throw std::invalid_argument("resample_arclength: degenerate loop");
    }
    const double L = polyline_length(in, closed);
    const std::size_t nseg_out = closed ? n : n - 1;

    // Secant iteration on the chord length so the march lands exactly on the
    // end point (open) or returns to the start (closed).
    auto march = [&](double c, std::vector<Vec2>* out) -> double {
        Walker w{in, closed, 0, 0.0, in[0]};
        if (out) {
            out->clear();
            out->push_back(w.pos);
        }
        for (std::size_t i = 0; i < nseg_out - 1; ++i) {
            if (!w.advance_chord(c)) return -1e300;
            if (out) out->push_back(w.pos);
        }
        // Signed residual: remaining distance to the goal along the final chord.
        const Vec2 goal = closed ? in[0] : in.back();
        return dist(w.pos, goal) - c;
    };

    double c0 = L / static_cast<double>(nseg_out);
    double r0 = march(c0, nullptr);
    double c1 = c0 * (1.0 + (r0 > 0 ? 1e-4 : -1e-4));
    double r1 = march(c1, nullptr);
    for (int it = 0; it < 60 && std::abs(r1) > 1e-15 * L; ++it) {
        if (r1 == r0) break;
        double c2 = c1 - r1 * (c1 - c0) / (r1 - r0);
        if (!(c2 > 0.0) || !std::isfinite(c2)) break;
        c0 = c1;
        r0 = r1;
        c1 = c2;
        r1 = march(c1, nullptr);
    }
    std::vector<Vec2> out_pts;
    march(c1, &out_pts);
    if (!closed) out_pts.push_back(in.back());

    PlanarCurve out;
    out.points = std::move(out_pts);
    out.closed = closed;
    out.ds = c1;
    validate_curve(out);
    return out;
}

double procrustes_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("procrustes_distance: size mismatch");
    const double n = static_cast<double>(a.size());
    Vec2 ca{0, 0}, cb{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca = ca + a[i];
        cb = cb + b[i];
    }
    ca = (1.0 / n) * ca;
    cb = (1.0 / n) * cb;
    double sc = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Vec2 u = a[i] - ca, v = b[i] - cb;
        sc += u.x * v.x + u.y * v.y;
        ss += u.x * v.y - u.y * v.x;
    }
    const double theta = std::atan2(ss, sc);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Vec2 u = rotate(a[i] - ca, theta) + cb;
        worst = std::max(worst, dist(u, b[i]));
    }
    return worst;
}

}  // namespace elastica
