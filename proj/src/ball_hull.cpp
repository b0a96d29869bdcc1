#include "ballpoly/ball_hull.hpp"

#include <algorithm>
#include <limits>

namespace ballpoly {

Configuration::Configuration(std::vector<Point3> points, Tolerance tol)
    : Configuration(std::move(points), {}, tol) {}

Configuration::Configuration(std::vector<Point3> points, std::vector<int> labels, Tolerance tol)
    : points_(std::move(points)), labels_(std::move(labels)), tol_(tol) {
    tol_.validate();
    if (points_.empty()) fail(Errc::EmptyInput, "configuration needs at least one point");
    if (labels_.empty()) {
        labels_.resize(points_.size());
        for (std::size_t i = 0; i < points_.size(); ++i) labels_[i] = static_cast<int>(i);
    }
    if (labels_.size() != points_.size())
        fail(Errc::InvalidSpec, "label/point count mismatch");
    for (const auto& p : points_)
        if (!p.finite()) fail(Errc::ParseError, "non-finite coordinate");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (dist(points_[i], points_[j]) <= tol_.eq_dist)
                fail(Errc::DuplicatePoints, "points " + std::to_string(labels_[i]) + " and " +
                                                std::to_string(labels_[j]) + " coincide");
}

double Configuration::diameter() const {
    double d = 0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            d = std::max(d, dist(points_[i], points_[j]));
    return d;
}

double Configuration::circumradius() const { return circumball(points_).radius; }

Configuration Configuration::subset(const std::vector<std::size_t>& keep) const {
    std::vector<Point3> pts;
    std::vector<int> labs;
    for (std::size_t i : keep) {
        pts.push_back(points_[i]);
        labs.push_back(labels_[i]);
    }
    return Configuration(std::move(pts), std::move(labs), tol_);
}

Configuration Configuration::scaled(double factor) const {
    std::vector<Point3> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(p * factor);
    return Configuration(std::move(pts), labels_, tol_);
}

bool in_ball_set(const Configuration& v, const Point3& x) {
    for (const auto& p : v.points())
        if (dist(x, p) > 1.0 + v.tol().eq_dist) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Essential points
// ---------------------------------------------------------------------------

namespace {

// Margin of x as a witness for point index vi: min over other points of
// (1 - |x - w|). Positive margin certifies essentiality.
double witness_margin(const Configuration& v, std::size_t vi, const Point3& x) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j == vi) continue;
        m = std::min(m, 1.0 - dist(x, v[j]));
    }
    return m;
}

// The best witness maximizes the margin, i.e. minimizes the maximum
// distance to the other points over the unit sphere around v[vi]. At the
// optimum the set of farthest points has size 1, 2, or 3, and each support
// set contributes closed-form stationary points: the sphere point nearest
// or farthest from one point, the distance extremes on a bisector circle
// of two, or the two sphere points equidistant from three. Enumerating all
// of them is exhaustive and has no convergence failure modes.
std::pair<Point3, double> best_witness(const Configuration& v, std::size_t vi) {
    const Point3 center = v[vi];
    std::vector<Point3> others;
    others.reserve(v.size() - 1);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (j != vi) others.push_back(v[j]);

    Point3 best_x = center + Vec3{0, 0, 1};
    double best_m = -std::numeric_limits<double>::infinity();
    const auto consider = [&](const Point3& x) {
        const double m = witness_margin(v, vi, x);
        if (m > best_m) {
            best_m = m;
            best_x = x;
        }
    };

    for (const auto& w : others) {
        const Vec3 d = w - center;
        if (d.norm() < 1e-12) continue;
        consider(center + normalized(d));
        consider(center - normalized(d));
    }

    // Bisector plane of w1, w2: <x, u> = c0 with u = w2 - w1.
    const auto bisector_circle = [&](const Point3& w1, const Point3& w2, Circle3& out) {
        const Vec3 u = w2 - w1;
        const double un = u.norm();
        if (un < 1e-12) return false;
        const Vec3 uh = u / un;
        const double c0 = (w2.norm2() - w1.norm2()) / (2.0 * un);
        const double delta = c0 - dot(center, uh);
        if (std::abs(delta) >= 1.0 - 1e-12) return false;
        out = make_circle(center + uh * delta, std::sqrt(1.0 - delta * delta), uh);
        return true;
    };

    for (std::size_t a = 0; a < others.size(); ++a) {
        for (std::size_t b = a + 1; b < others.size(); ++b) {
            Circle3 circle;
            if (!bisector_circle(others[a], others[b], circle)) continue;
            const Vec3 d = others[a] - circle.center;
            if ((d - circle.normal * dot(d, circle.normal)).norm() < 1e-12) continue;
            const DistanceExtremes ex = circle_distance_extremes(circle, others[a], v.tol());
            consider(circle.point(ex.theta_min));
            consider(circle.point(ex.theta_max));
        }
    }

    for (std::size_t a = 0; a < others.size(); ++a) {
        for (std::size_t b = a + 1; b < others.size(); ++b) {
            for (std::size_t c = b + 1; c < others.size(); ++c) {
                const Vec3 u1 = others[b] - others[a];
                const Vec3 u2 = others[c] - others[a];
                if (cross(u1, u2).norm() < 1e-12) continue;
                const double r1 = (others[b].norm2() - others[a].norm2()) / 2.0 - dot(u1, center);
                const double r2 = (others[c].norm2() - others[a].norm2()) / 2.0 - dot(u2, center);
                // Minimal-norm solution of the two plane equations
                // relative to the sphere center, then the line through it.
                const double g11 = u1.norm2(), g12 = dot(u1, u2), g22 = u2.norm2();
                const double det = g11 * g22 - g12 * g12;
                if (std::abs(det) < 1e-18) continue;
                const double alpha = (r1 * g22 - g12 * r2) / det;
                const double beta = (g11 * r2 - r1 * g12) / det;
                // The minimal-norm solution lies in span{u1,u2}, so it is
                // orthogonal to the line direction.
                const Vec3 y0 = u1 * alpha + u2 * beta;
                const double disc = 1.0 - y0.norm2();
                if (disc < 0) continue;
                const Vec3 dir = normalized(cross(u1, u2));
                consider(center + y0 + dir * std::sqrt(disc));
                consider(center + y0 - dir * std::sqrt(disc));
            }
        }
    }
    return {best_x, best_m};
}

} // namespace

EssentialityReport essential_points(const Configuration& v) {
    const double cr = v.circumradius();
    if (cr >= 1.0 - v.tol().eq_dist)
        fail(Errc::NotFullDimensional, "circumradius must be below 1");

    EssentialityReport rep;
    if (v.size() == 1) {
        rep.essential.insert(v.labels()[0]);
        rep.witnesses[v.labels()[0]] = v[0] + Vec3{0, 0, 1};
        rep.margins[v.labels()[0]] = 1.0;
        return rep;
    }

    const double diam = v.diameter();
    const bool unit_diam = std::abs(diam - 1.0) <= v.tol().eq_dist;

    for (std::size_t i = 0; i < v.size(); ++i) {
        const int label = v.labels()[i];
        if (unit_diam) {
            // Two-diameter certificate: a point at unit distance from two
            // others has the explicit witness on the ray toward their
            // midpoint, no search needed.
            std::vector<std::size_t> at_one;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != i && v.tol().near_unit(dist(v[i], v[j]))) at_one.push_back(j);
            if (at_one.size() >= 2) {
                const Point3 mid = (v[at_one[0]] + v[at_one[1]]) * 0.5;
                const Point3 w = v[i] + normalized(mid - v[i]);
                rep.essential.insert(label);
                rep.witnesses[label] = w;
                rep.margins[label] = witness_margin(v, i, w);
                continue;
            }
        }
        auto [x, margin] = best_witness(v, i);
        if (margin > v.tol().eq_dist) {
            rep.essential.insert(label);
            rep.witnesses[label] = x;
            rep.margins[label] = margin;
        } else {
            rep.inessential.insert(label);
        }
    }
    return rep;
}

Configuration tighten(const Configuration& v) {
    const EssentialityReport rep = essential_points(v);
    if (rep.inessential.empty()) return v;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (rep.essential.count(v.labels()[i])) keep.push_back(i);
    const Configuration result = v.subset(keep);
    if (!essential_points(result).inessential.empty())
        fail(Errc::InternalInvariantViolation, "tightened set still has inessential points");
    return result;
}

// ---------------------------------------------------------------------------
// Separation
// ---------------------------------------------------------------------------

namespace {

Point3 closest_on_segment(const Point3& a, const Point3& b, const Point3& z) {
    const Vec3 ab = b - a;
    const double t = std::clamp(dot(z - a, ab) / ab.norm2(), 0.0, 1.0);
    return a + ab * t;
}

Point3 closest_on_triangle(const Point3& a, const Point3& b, const Point3& c, const Point3& z) {
    // Project onto the plane; if the projection has nonnegative barycentric
    // coordinates it is the answer, otherwise the nearest edge carries it.
    const Vec3 u = b - a, v = c - a, n = cross(u, v);
    const double n2 = n.norm2();
    if (n2 > 1e-24) {
        const Vec3 w = z - a;
        const double gamma = dot(cross(u, w), n) / n2;
        const double beta = dot(cross(w, v), n) / n2;
        const double alpha = 1.0 - gamma - beta;
        if (alpha >= 0 && beta >= 0 && gamma >= 0) return a * alpha + b * beta + c * gamma;
    }
    const Point3 cands[3] = {closest_on_segment(a, b, z), closest_on_segment(a, c, z),
                             closest_on_segment(b, c, z)};
    Point3 best = cands[0];
    for (const auto& p : cands)
        if (dist(p, z) < dist(best, z)) best = p;
    return best;
}

bool inside_tetra(const Point3& a, const Point3& b, const Point3& c, const Point3& d, const Point3& z) {
    const Vec3 cols[3] = {b - a, c - a, d - a};
    const Vec3 rhs = z - a;
    // Cramer's rule on the barycentric system.
    const double det = dot(cols[0], cross(cols[1], cols[2]));
    if (std::abs(det) < 1e-18) return false;
    const double l1 = dot(rhs, cross(cols[1], cols[2])) / det;
    const double l2 = dot(cols[0], cross(rhs, cols[2])) / det;
    const double l3 = dot(cols[0], cross(cols[1], rhs)) / det;
    return l1 >= -1e-12 && l2 >= -1e-12 && l3 >= -1e-12 && l1 + l2 + l3 <= 1.0 + 1e-12;
}

// Nearest point of conv S to z, by enumerating support faces of size <= 3.
// Inputs are desk-scale, so the cubic enumeration is fine.
Point3 closest_in_hull(const std::vector<Point3>& s, const Point3& z, bool& inside) {
    inside = false;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n && !inside; ++i)
        for (std::size_t j = i + 1; j < n && !inside; ++j)
            for (std::size_t k = j + 1; k < n && !inside; ++k)
                for (std::size_t l = k + 1; l < n && !inside; ++l)
                    inside = inside_tetra(s[i], s[j], s[k], s[l], z);
    Point3 best = s[0];
    double best_d = dist(best, z);
    const auto consider = [&](const Point3& p) {
        const double d = dist(p, z);
        if (d < best_d) {
            best_d = d;
            best = p;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        consider(s[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            consider(closest_on_segment(s[i], s[j], z));
            for (std::size_t k = j + 1; k < n; ++k) consider(closest_on_triangle(s[i], s[j], s[k], z));
        }
    }
    if (best_d <= 1e-12) inside = true;
    return best;
}

} // namespace

Ball separating_ball(const std::vector<Point3>& s, const Point3& z, const Tolerance& tol) {
    if (s.empty()) fail(Errc::EmptyInput, "cannot separate from an empty set");
    bool inside = false;
    const Point3 a = closest_in_hull(s, z, inside);
    if (inside) fail(Errc::NotSeparable, "point lies in the convex hull of the set");
    const Vec3 u = normalized(a - z);
    const Ball b{a + u, 1.0};
    for (const auto& p : s)
        if (dist(b.center, p) > 1.0 + tol.eq_dist)
            fail(Errc::NotSeparable, "separation post-check failed; point is in the ball hull");
    if (dist(b.center, z) <= 1.0)
        fail(Errc::NotSeparable, "separation post-check failed; point is in the ball hull");
    return b;
}

// ---------------------------------------------------------------------------
// Spindles
// ---------------------------------------------------------------------------

namespace {

// Maximum distance from x to the cap {c in S(center): |c - other| <= 1}.
double max_dist_to_cap(const Point3& center, const Point3& other, const Point3& x,
                       const Tolerance& tol) {
    const double dx = dist(x, center);
    if (dx < 1e-14) return 1.0; // every cap point is at distance exactly 1
    // Unconstrained maximum over the whole sphere.
    const Point3 far = center + (center - x) / dx;
    if (dist(far, other) <= 1.0) return dx + 1.0;
    // Otherwise the maximum sits on the cap rim, the circle S(center) cap S(other).
    const Circle3 rim = intersection_circle(center, other, tol);
    const Vec3 d = x - rim.center;
    const Vec3 in_plane = d - rim.normal * dot(d, rim.normal);
    if (in_plane.norm() <= 1e-14) {
        // x on the rim axis: the rim is equidistant from x.
        return std::sqrt(dot(d, rim.normal) * dot(d, rim.normal) + rim.radius * rim.radius);
    }
    const DistanceExtremes ex = circle_distance_extremes(rim, x, tol);
    return dist(rim.point(ex.theta_max), x);
}

} // namespace

bool spindle_contains(const Point3& a, const Point3& b, const Point3& x, const Tolerance& tol) {
    const double ab = dist(a, b);
    if (ab >= 2.0 - tol.eq_dist) {
        // Wide pairs degenerate to the solid ball spanned by the segment.
        return dist(x, (a + b) * 0.5) <= 0.5 * ab + tol.eq_dist;
    }
    if (ab <= tol.eq_dist) return dist(x, a) <= tol.eq_dist;
    const double m = std::max(max_dist_to_cap(a, b, x, tol), max_dist_to_cap(b, a, x, tol));
    return m <= 1.0 + tol.eq_dist;
}

} // namespace ballpoly
