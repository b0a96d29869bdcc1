#include "ballpoly/geom.hpp"

#include <algorithm>
#include <tuple>

namespace ballpoly {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::DegenerateCoincident: return "DegenerateCoincident";
        case Errc::DegenerateEmptyOrPoint: return "DegenerateEmptyOrPoint";
        case Errc::AxisDegenerate: return "AxisDegenerate";
        case Errc::NotOnSphere: return "NotOnSphere";
        case Errc::NotFullDimensional: return "NotFullDimensional";
        case Errc::NotSeparable: return "NotSeparable";
        case Errc::NotTight: return "NotTight";
        case Errc::ToleranceConflict: return "ToleranceConflict";
        case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
        case Errc::NonGenericUnsupported: return "NonGenericUnsupported";
        case Errc::GhsCrossCheckFailure: return "GhsCrossCheckFailure";
        case Errc::NotExtremalInput: return "NotExtremalInput";
        case Errc::DualityFailure: return "DualityFailure";
        case Errc::BarycenterFallback: return "BarycenterFallback";
        case Errc::InvalidArcSelection: return "InvalidArcSelection";
        case Errc::InvalidParity: return "InvalidParity";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::TruncationTooCoarse: return "TruncationTooCoarse";
        case Errc::DualEdgeConflict: return "DualEdgeConflict";
        case Errc::InvalidOrder: return "InvalidOrder";
        case Errc::TooLarge: return "TooLarge";
        case Errc::DuplicatePoints: return "DuplicatePoints";
        case Errc::ParseError: return "ParseError";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

Circle3 make_circle(const Point3& center, double radius, const Vec3& unit_normal) {
    if (!(radius > 0)) fail(Errc::InvalidSpec, "circle radius must be positive");
    Circle3 c;
    c.center = center;
    c.radius = radius;
    c.normal = unit_normal;
    // Project the x-axis into the plane; fall back to y when nearly parallel.
    Vec3 u = Vec3{1, 0, 0} - unit_normal * unit_normal.x;
    if (u.norm() < 1e-6) u = Vec3{0, 1, 0} - unit_normal * unit_normal.y;
    c.frame_u = normalized(u);
    c.frame_w = cross(unit_normal, c.frame_u); // u x w = normal
    return c;
}

// ---------------------------------------------------------------------------
// Angular interval sets
// ---------------------------------------------------------------------------

bool AngularIntervalSet::contains(double theta, double eps) const {
    if (full_circle) return true;
    for (const auto& iv : intervals)
        if (iv.contains(theta, eps)) return true;
    return false;
}

double AngularIntervalSet::measure() const {
    if (full_circle) return kTwoPi;
    double m = 0;
    for (const auto& iv : intervals) m += iv.length();
    return m;
}

namespace {

// Non-wrapping segment [lo, hi] with 0 <= lo <= hi <= 2*pi.
struct Segment {
    double lo, hi;
};

void unroll(const AngularInterval& iv, std::vector<Segment>& out) {
    const double s = wrap_angle(iv.start);
    const double e = wrap_angle(iv.end);
    if (s <= e) {
        out.push_back({s, e});
    } else {
        out.push_back({s, kTwoPi});
        out.push_back({0, e});
    }
}

AngularIntervalSet assemble(std::vector<Segment> segs, double angle_eps) {
    AngularIntervalSet result;
    if (segs.empty()) return result;
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
    });
    // Merge segments whose gap is within the angular slack.
    std::vector<Segment> merged;
    for (const auto& s : segs) {
        if (!merged.empty() && s.lo <= merged.back().hi + angle_eps)
            merged.back().hi = std::max(merged.back().hi, s.hi);
        else
            merged.push_back(s);
    }
    // Merge across 0 when the first segment starts at 0 and the last ends at 2*pi.
    bool wrapped = false;
    if (merged.size() >= 2 && merged.front().lo <= angle_eps && merged.back().hi >= kTwoPi - angle_eps) {
        merged.front().lo = merged.back().lo - kTwoPi; // negative lo marks the wrap
        merged.pop_back();
        wrapped = true;
    }
    if (merged.size() == 1) {
        const double len = merged[0].hi - merged[0].lo;
        if (len >= kTwoPi - angle_eps) return AngularIntervalSet::full();
    }
    (void)wrapped;
    for (const auto& s : merged) {
        AngularInterval iv{wrap_angle(s.lo), wrap_angle(s.hi)};
        if (s.hi - s.lo <= angle_eps) {
            // Degenerate component: keep as a single angle.
            const double mid = wrap_angle(0.5 * (s.lo + s.hi));
            iv = {mid, mid};
        }
        result.intervals.push_back(iv);
    }
    std::sort(result.intervals.begin(), result.intervals.end(),
              [](const AngularInterval& a, const AngularInterval& b) { return a.start < b.start; });
    return result;
}

} // namespace

AngularIntervalSet make_interval_set(std::vector<AngularInterval> raw, double angle_eps) {
    std::vector<Segment> segs;
    for (const auto& iv : raw) unroll(iv, segs);
    return assemble(std::move(segs), angle_eps);
}

AngularIntervalSet interval_set_intersect(const AngularIntervalSet& a, const AngularIntervalSet& b,
                                          double angle_eps) {
    if (a.full_circle) return b;
    if (b.full_circle) return a;
    if (a.is_empty() || b.is_empty()) return AngularIntervalSet::empty();

    std::vector<Segment> sa, sb, out;
    for (const auto& iv : a.intervals) unroll(iv, sa);
    for (const auto& iv : b.intervals) unroll(iv, sb);
    for (const auto& x : sa) {
        for (const auto& y : sb) {
            const double lo = std::max(x.lo, y.lo);
            const double hi = std::min(x.hi, y.hi);
            if (hi >= lo - angle_eps) {
                // A miss within the slack counts as touching: keep a point there.
                out.push_back({std::min(lo, hi), std::max(lo, hi)});
            }
        }
    }
    return assemble(std::move(out), angle_eps);
}

// ---------------------------------------------------------------------------
// Smallest enclosing ball
// ---------------------------------------------------------------------------

namespace {

Ball ball_two(const Point3& a, const Point3& b) {
    return {(a + b) * 0.5, 0.5 * dist(a, b)};
}

bool solve3x3(const double m[3][3], const double rhs[3], double out[3]) {
    double a[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];
        a[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) return false;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int j = col; j < 4; ++j) a[r][j] -= f * a[col][j];
        }
    }
    for (int i = 0; i < 3; ++i) out[i] = a[i][3] / a[i][i];
    return true;
}

// Circumsphere center of 3 points (in their plane) or 4 points; returns
// false when degenerate (collinear / coplanar).
bool circumcenter3(const Point3& a, const Point3& b, const Point3& c, Point3& center) {
    const Vec3 u = b - a, v = c - a;
    const Vec3 n = cross(u, v);
    const double n2 = n.norm2();
    if (n2 < 1e-24) return false;
    const Vec3 rel = (cross(v, n) * u.norm2() + cross(n, u) * v.norm2()) / (2.0 * n2);
    center = a + rel;
    return true;
}

bool circumcenter4(const Point3& a, const Point3& b, const Point3& c, const Point3& d, Point3& center) {
    // |x-a|^2 = |x-b|^2 etc. gives three linear equations in x.
    const Point3 pts[3] = {b, c, d};
    double m[3][3], rhs[3];
    for (int i = 0; i < 3; ++i) {
        const Vec3 diff = pts[i] - a;
        m[i][0] = 2 * diff.x;
        m[i][1] = 2 * diff.y;
        m[i][2] = 2 * diff.z;
        rhs[i] = pts[i].norm2() - a.norm2();
    }
    double x[3];
    if (!solve3x3(m, rhs, x)) return false;
    center = {x[0], x[1], x[2]};
    return true;
}

bool in_ball(const Point3& p, const Ball& b, double slack) {
    return dist(p, b.center) <= b.radius + slack;
}

// Smallest ball with all support points on its boundary, robust to
// degenerate supports by falling back to smaller subsets.
Ball ball_from_support(const std::vector<Point3>& r) {
    constexpr double slack = 1e-12;
    switch (r.size()) {
        case 0: return {Point3{0, 0, 0}, 0};
        case 1: return {r[0], 0};
        case 2: return ball_two(r[0], r[1]);
        case 3: {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    const Ball b = ball_two(r[i], r[j]);
                    if (in_ball(r[3 - i - j], b, slack)) return b;
                }
            Point3 c;
            if (circumcenter3(r[0], r[1], r[2], c)) return {c, dist(c, r[0])};
            return ball_two(r[0], r[1]); // collinear; extremes found above
        }
        default: {
            Ball best{Point3{}, -1};
            for (int skip = 0; skip < 4; ++skip) {
                std::vector<Point3> sub;
                for (int i = 0; i < 4; ++i)
                    if (i != skip) sub.push_back(r[i]);
                const Ball b = ball_from_support(sub);
                if (in_ball(r[skip], b, slack) && (best.radius < 0 || b.radius < best.radius)) best = b;
            }
            if (best.radius >= 0) return best;
            Point3 c;
            if (circumcenter4(r[0], r[1], r[2], r[3], c)) return {c, dist(c, r[0])};
            return ball_from_support({r[0], r[1], r[2]});
        }
    }
}

Ball welzl(std::vector<Point3>& pts, std::size_t n, std::vector<Point3>& support) {
    if (n == 0 || support.size() == 4) return ball_from_support(support);
    const Point3 p = pts[n - 1];
    Ball b = welzl(pts, n - 1, support);
    if (in_ball(p, b, 1e-12)) return b;
    support.push_back(p);
    b = welzl(pts, n - 1, support);
    support.pop_back();
    // Move-to-front keeps later recursion shallow.
    for (std::size_t i = n - 1; i > 0; --i) pts[i] = pts[i - 1];
    pts[0] = p;
    return b;
}

} // namespace

Ball circumball(std::vector<Point3> points) {
    if (points.empty()) fail(Errc::EmptyInput, "circumball of an empty set");
    for (const auto& p : points)
        if (!p.finite()) fail(Errc::InvalidSpec, "circumball input must be finite");
    std::sort(points.begin(), points.end(), [](const Point3& a, const Point3& b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    });
    std::vector<Point3> support;
    return welzl(points, points.size(), support);
}

// ---------------------------------------------------------------------------
// Circles and arcs
// ---------------------------------------------------------------------------

Circle3 intersection_circle(const Point3& p, const Point3& q, const Tolerance& tol) {
    const double d = dist(p, q);
    if (d <= tol.eq_dist) fail(Errc::DegenerateCoincident, "sphere centers coincide");
    if (d >= 2.0 - tol.eq_dist) fail(Errc::DegenerateEmptyOrPoint, "spheres meet in at most a point");
    const double r = std::sqrt(1.0 - 0.25 * d * d);
    return make_circle((p + q) * 0.5, r, (q - p) / d);
}

AngularIntervalSet ball_arc_on_circle(const Circle3& circle, const Point3& v, const Tolerance& tol) {
    const Vec3 d = v - circle.center;
    const double r = circle.radius;
    const double alpha = dot(d, circle.frame_u);
    const double beta = dot(d, circle.frame_w);
    const double big_d = (d.norm2() + r * r - 1.0) / (2.0 * r);
    const double rho = std::hypot(alpha, beta);

    if (rho < 1e-15) {
        // v on the circle axis: all circle points are equidistant from v.
        return big_d <= 0 ? AngularIntervalSet::full() : AngularIntervalSet::empty();
    }
    const double ratio = big_d / rho;
    // A relative guard absorbs rounding at tangency; beyond it the
    // configuration is genuinely empty / full.
    if (ratio > 1.0 + 1e-12) return AngularIntervalSet::empty();
    if (ratio < -1.0 - 1e-12) return AngularIntervalSet::full();

    const double phi0 = std::atan2(beta, alpha);
    const double delta = std::acos(std::clamp(ratio, -1.0, 1.0));
    AngularInterval iv{wrap_angle(phi0 - delta), wrap_angle(phi0 + delta)};
    return make_interval_set({iv}, tol.angle_eps);
}

DistanceExtremes circle_distance_extremes(const Circle3& circle, const Point3& v, const Tolerance& tol) {
    const Vec3 d = v - circle.center;
    const Vec3 in_plane = d - circle.normal * dot(d, circle.normal);
    if (in_plane.norm() <= tol.eq_dist)
        fail(Errc::AxisDegenerate, "point lies on the circle axis; all distances equal");
    const double theta_min = wrap_angle(std::atan2(dot(d, circle.frame_w), dot(d, circle.frame_u)));
    return {theta_min, wrap_angle(theta_min + kPi)};
}

// ---------------------------------------------------------------------------
// Cone membership on the unit sphere
// ---------------------------------------------------------------------------

namespace {

bool solve2x2(double a, double b, double c, double d, double r0, double r1, double& x, double& y) {
    const double det = a * d - b * c;
    if (std::abs(det) < 1e-14) return false;
    x = (r0 * d - b * r1) / det;
    y = (a * r1 - r0 * c) / det;
    return true;
}

} // namespace

bool spherical_hull_membership(const Point3& apex, const std::vector<Point3>& generators,
                               const Point3& x, const Tolerance& tol) {
    if (generators.empty()) fail(Errc::EmptyInput, "no generators");
    const auto on_sphere = [&](const Point3& p) { return tol.near_unit(dist(p, apex)); };
    if (!on_sphere(x)) fail(Errc::NotOnSphere, "query point not on the unit sphere around apex");
    for (const auto& g : generators)
        if (!on_sphere(g)) fail(Errc::NotOnSphere, "generator not on the unit sphere around apex");

    const Vec3 t = x - apex;
    std::vector<Vec3> g;
    g.reserve(generators.size());
    for (const auto& p : generators) g.push_back(p - apex);

    const double coef_slack = 1e-9;
    const double resid_slack = 1e-9;
    const std::size_t n = g.size();

    // Caratheodory: membership in a 3D cone is witnessed by <= 3 generators.
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = dot(t, g[i]) / g[i].norm2();
        if (lam >= -coef_slack && (t - g[i] * lam).norm() <= resid_slack) return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Least squares in the span of g[i], g[j].
            const double a = g[i].norm2(), b = dot(g[i], g[j]), d = g[j].norm2();
            double l1, l2;
            if (!solve2x2(a, b, b, d, dot(t, g[i]), dot(t, g[j]), l1, l2)) continue;
            if (l1 < -coef_slack || l2 < -coef_slack) continue;
            if ((t - g[i] * l1 - g[j] * l2).norm() <= resid_slack) return true;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const double m[3][3] = {{g[i].x, g[j].x, g[k].x},
                                        {g[i].y, g[j].y, g[k].y},
                                        {g[i].z, g[j].z, g[k].z}};
                const double rhs[3] = {t.x, t.y, t.z};
                double lam[3];
                if (!solve3x3(m, rhs, lam)) continue;
                if (lam[0] >= -coef_slack && lam[1] >= -coef_slack && lam[2] >= -coef_slack) return true;
            }
        }
    }
    return false;
}

} // namespace ballpoly
