#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "ballpoly/errors.hpp"

namespace ballpoly {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kPi = std::numbers::pi;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

using Point3 = Vec3;

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }
inline Vec3 normalized(const Vec3& v) { return v / v.norm(); }

// Classification tolerances. One symmetric band for "distance equals 1",
// a larger clustering radius for merging vertex candidates that arise
// independently on several circles, and an angular slack for interval
// arithmetic on circles.
struct Tolerance {
    double eq_dist = 1e-9;
    double vertex_merge = 1e-7;
    double angle_eps = 1e-9;

    void validate() const {
        if (!(0 < eq_dist && eq_dist < vertex_merge && vertex_merge < 1e-3))
            fail(Errc::InvalidSpec, "tolerance bands must satisfy 0 < eq_dist < vertex_merge < 1e-3");
        if (!(angle_eps > 0)) fail(Errc::InvalidSpec, "angle_eps must be positive");
    }

    // True if d lies in the closed band around distance 1.
    bool near_unit(double d) const { return std::abs(d - 1.0) <= eq_dist; }
};

struct Ball {
    Point3 center;
    double radius = 0;
};

// Oriented circle with a deterministic in-plane frame. Points are
// parameterized as point(t) = center + r cos(t) u + r sin(t) w; the frame
// {u, w, normal} is orthonormal and right-handed (u x w = normal).
struct Circle3 {
    Point3 center;
    double radius = 0;
    Vec3 normal;
    Vec3 frame_u;
    Vec3 frame_w;

    Point3 point(double theta) const {
        return center + radius * (std::cos(theta) * frame_u + std::sin(theta) * frame_w);
    }
    // Angle of the projection of p into the circle plane.
    double angle_of(const Point3& p) const {
        const Vec3 d = p - center;
        return std::atan2(dot(d, frame_w), dot(d, frame_u));
    }
};

// Builds the deterministic frame for a plane with the given unit normal:
// frame_u is the normalized projection of the x-axis, falling back to the
// y-axis when the normal is nearly parallel to x.
Circle3 make_circle(const Point3& center, double radius, const Vec3& unit_normal);

inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0;
    return a;
}

// Closed arc on a circle, traversed counterclockwise from start to end
// (wrapping through 0 allowed). start == end denotes a single point.
struct AngularInterval {
    double start = 0;
    double end = 0;

    double length() const { return wrap_angle(end - start); }
    bool is_point(double angle_eps) const { return length() <= angle_eps; }
    double midpoint() const { return wrap_angle(start + 0.5 * length()); }
    bool contains(double theta, double eps = 0) const {
        const double t = wrap_angle(theta - start);
        return t <= length() + eps || t >= kTwoPi - eps;
    }
};

// Union of pairwise-disjoint closed arcs, sorted by start angle. Gaps
// between stored arcs always exceed angle_eps; near-touching arcs are
// merged on construction. full_circle excludes any stored interval.
struct AngularIntervalSet {
    std::vector<AngularInterval> intervals;
    bool full_circle = false;

    static AngularIntervalSet full() { return {.intervals = {}, .full_circle = true}; }
    static AngularIntervalSet empty() { return {}; }

    bool is_empty() const { return !full_circle && intervals.empty(); }
    std::size_t component_count() const { return full_circle ? 1 : intervals.size(); }
    bool contains(double theta, double eps = 0) const;
    double measure() const;
};

// Normalizes a raw list of arcs into a valid set: sorts, merges overlaps
// and gaps <= angle_eps (also across 0), detects the full circle.
AngularIntervalSet make_interval_set(std::vector<AngularInterval> raw, double angle_eps);

AngularIntervalSet interval_set_intersect(const AngularIntervalSet& a, const AngularIntervalSet& b,
                                          double angle_eps);

// Smallest enclosing ball of a finite point set (Welzl-style recursion over
// at most 4 support points). Input is sorted internally, so the result does
// not depend on the order of the points.
Ball circumball(std::vector<Point3> points);

// The circle of points at distance 1 from both p and q: centered at the
// midpoint, radius sqrt(1 - |p-q|^2/4), normal along q - p.
Circle3 intersection_circle(const Point3& p, const Point3& q, const Tolerance& tol = {});

// Angles theta with |circle(theta) - v| <= 1, in closed form: the
// half-plane condition alpha cos t + beta sin t >= D with
//   alpha = <v-c, u>, beta = <v-c, w>, D = (|c-v|^2 + r^2 - 1) / (2r).
// Result is the full circle, empty, or one closed interval centered at
// atan2(beta, alpha) with half-width acos(clamp(D/hypot(alpha,beta))).
AngularIntervalSet ball_arc_on_circle(const Circle3& circle, const Point3& v, const Tolerance& tol = {});

// Angles minimizing / maximizing the distance from circle(theta) to v. The
// minimizer is the central projection of v's in-plane projection; the
// maximizer is diametrically opposite. Distance is strictly monotone along
// each half-circle between them.
struct DistanceExtremes {
    double theta_min = 0;
    double theta_max = 0;
};
DistanceExtremes circle_distance_extremes(const Circle3& circle, const Point3& v,
                                          const Tolerance& tol = {});

// Membership of x in the spherical convex hull of `generators` on the unit
// sphere around apex: decided as membership of x - apex in the convex cone
// of {g - apex} by enumerating support subsets of size <= 3.
bool spherical_hull_membership(const Point3& apex, const std::vector<Point3>& generators,
                               const Point3& x, const Tolerance& tol = {});

} // namespace ballpoly
