#pragma once
// Planar-curve data model: uniform-arclength polylines, tangent angles,
// curvature extraction and reconstruction, bending energy, resampling.
//
// Sign convention: curvature is positive where the curve turns
// counterclockwise (kappa = dphi/ds, phi the tangent angle from +x).

#include <cstddef>
#include <span>
#include <vector>

namespace elastica {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double t, Vec2 a) { return {t * a.x, t * a.y}; }
double norm(Vec2 a);
double dist(Vec2 a, Vec2 b);
Vec2 rotate(Vec2 a, double theta);

// Uniformly arclength-sampled polyline. `ds` is the common spacing of
// consecutive points; when `closed`, the wrap segment last->first has the
// same length.
struct PlanarCurve {
    std::vector<Vec2> points;
    double ds = 0.0;
    bool closed = false;

    std::size_t segment_count() const {
        return closed ? points.size() : points.size() - 1;
    }
    double total_length() const {
        return ds * static_cast<double>(segment_count());
    }
};

// Checks the PlanarCurve invariants: >= 8 points, ds > 0, all segment
// lengths equal to ds within 1e-6 relative (wrap segment included when
// closed). Throws std::invalid_argument on violation.
void validate_curve(const PlanarCurve& c);

// Builds a curve from points, deriving ds as the mean segment length, and
// validates it.
PlanarCurve make_curve(std::vector<Vec2> points, bool closed);

// Unwrapped tangent angle samples on the curve grid; no 2*pi jumps between
// neighbours.
struct TangentAngle {
    std::vector<double> phi;
};

// Sampled curvature on a uniform arclength grid.
struct CurvatureProfile {
    std::vector<double> kappa;
    double ds = 0.0;
    bool periodic = false;
};

// Node tangent angles from the polyline (average of adjacent unwrapped chord
// directions; one-sided at open ends).
TangentAngle tangent_angle_of(const PlanarCurve& c);

// kappa = dphi/ds by centered differences of the unwrapped chord directions:
// kappa_i = (theta_{i+1/2} - theta_{i-1/2}) / ds. O(ds^2) for smooth curves;
// open ends are filled by quadratic extrapolation.
CurvatureProfile curvature_of(const PlanarCurve& c);

// Integrates dphi/ds = kappa, dz/ds = (cos phi, sin phi) with classical RK4
// at step ds (half-node kappa by cubic interpolation). The tangent direction
// is carried as an angle, so the velocity is unit by construction. A periodic
// profile whose curve closes up (within 1e-6 of ds) is returned closed.
PlanarCurve reconstruct_curve(const CurvatureProfile& profile, double x0,
                              double y0, double phi0);

// Same, additionally exposing the node tangent angles of the integration.
struct ReconstructedCurve {
    PlanarCurve curve;
    std::vector<double> phi;
};
ReconstructedCurve reconstruct_curve_detailed(const CurvatureProfile& profile,
                                              double x0, double y0,
                                              double phi0);

// Curve from already-known tangent angles on a uniform grid (used by the
// pendulum route, where phi is the solved variable).
PlanarCurve curve_from_tangent_angles(std::span<const double> phi, double ds,
                                      Vec2 start, bool periodic = false);

// Euler-Bernoulli energy, the integral of kappa^2 ds (trapezoid rule; plain
// periodic sum for closed curves).
double bending_energy(const PlanarCurve& c);

// Resamples an arbitrary polyline to n points with exactly equal chord
// spacing (equal-chord marching with a secant iteration on the chord
// length). First == last input point (within 1e-9 of the total length)
// is treated as a closed loop. Rejects duplicate consecutive points.
PlanarCurve resample_arclength(std::span<const Vec2> points, std::size_t n);

// Max pointwise distance between two equal-length point lists after the
// best rigid alignment (rotation + translation) of a onto b.
double procrustes_distance(std::span<const Vec2> a, std::span<const Vec2> b);

}  // namespace elastica
