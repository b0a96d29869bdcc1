#include <doctest.h>

#include <random>

#include "ballpoly/geom.hpp"

using namespace ballpoly;

TEST_CASE("circumball basics") {
    SUBCASE("singleton") {
        const Ball b = circumball({{1, 2, 3}});
        CHECK(b.radius == doctest::Approx(0.0));
        CHECK(dist(b.center, {1, 2, 3}) == doctest::Approx(0.0));
    }
    SUBCASE("two points at distance 1") {
        const Ball b = circumball({{0, 0, 0}, {1, 0, 0}});
        CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(dist(b.center, {0.5, 0, 0}) < 1e-12);
    }
    SUBCASE("regular tetrahedron of edge 1") {
        const double s = 1.0 / std::sqrt(8.0);
        const std::vector<Point3> tet = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
        const Ball b = circumball(tet);
        CHECK(b.radius == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    }
    SUBCASE("permutation invariance") {
        std::vector<Point3> pts = {{0.3, 0.1, -0.2}, {-0.1, 0.4, 0.0}, {0.2, -0.3, 0.3},
                                   {0.0, 0.0, 0.45}, {-0.2, -0.2, -0.2}};
        const Ball a = circumball(pts);
        std::reverse(pts.begin(), pts.end());
        const Ball b = circumball(pts);
        CHECK(a.radius == b.radius);
        CHECK(a.center.x == b.center.x);
        CHECK(a.center.y == b.center.y);
        CHECK(a.center.z == b.center.z);
    }
    SUBCASE("empty input") { CHECK_THROWS_AS(circumball({}), Error); }
}

TEST_CASE("intersection circle") {
    SUBCASE("unit separation") {
        const Circle3 c = intersection_circle({0, 0, 0}, {1, 0, 0});
        CHECK(c.radius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    }
    SUBCASE("poles at 0.6") {
        const Circle3 c = intersection_circle({0, 0, 0.6}, {0, 0, -0.6});
        CHECK(dist(c.center, {0, 0, 0}) < 1e-12);
        CHECK(c.radius == doctest::Approx(0.8).epsilon(1e-12));
        CHECK(std::abs(std::abs(c.normal.z) - 1.0) < 1e-12);
    }
    SUBCASE("sqrt2 separation, cross-checked by solving the sphere equations") {
        const Point3 p{0.1, -0.2, 0.3};
        const Point3 q = p + normalized(Vec3{1, 2, -1}) * std::sqrt(2.0);
        const Circle3 c = intersection_circle(p, q);
        CHECK(c.radius == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
        for (double theta : {0.0, 0.7, 2.9, 4.4}) {
            CHECK(dist(c.point(theta), p) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(dist(c.point(theta), q) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("degenerate inputs") {
        CHECK_THROWS_AS(intersection_circle({0, 0, 0}, {0, 0, 0}), Error);
        CHECK_THROWS_AS(intersection_circle({0, 0, 0}, {2.1, 0, 0}), Error);
    }
    SUBCASE("frame is right-handed and orthonormal") {
        const Circle3 c = intersection_circle({0.2, 0.4, -0.1}, {0.9, -0.3, 0.5});
        CHECK(std::abs(dot(c.frame_u, c.frame_w)) < 1e-12);
        CHECK(std::abs(dot(c.frame_u, c.normal)) < 1e-12);
        CHECK(dist(cross(c.frame_u, c.frame_w), c.normal) < 1e-12);
    }
}

TEST_CASE("ball arc on circle") {
    const Tolerance tol;
    SUBCASE("center inside: full circle") {
        const Circle3 c = make_circle({0, 0, 0}, 0.5, {0, 0, 1});
        CHECK(ball_arc_on_circle(c, {0, 0, 0}, tol).full_circle);
    }
    SUBCASE("far point: empty") {
        const Circle3 c = make_circle({0, 0, 0}, 0.5, {0, 0, 1});
        CHECK(ball_arc_on_circle(c, {2.0, 0, 0}, tol).is_empty());
    }
    SUBCASE("frozen interval against dense sampling") {
        const Circle3 c = intersection_circle({0, 0, 0.5}, {0, 0, -0.5});
        const Point3 v{std::sqrt(3.0), 0, 0};
        const AngularIntervalSet arc = ball_arc_on_circle(c, v, tol);
        REQUIRE(arc.intervals.size() == 1);
        // Dense-sampling oracle: membership agrees at a million angles.
        int mismatches = 0;
        for (int i = 0; i < 1000000; ++i) {
            const double theta = kTwoPi * i / 1000000;
            const bool inside = dist(c.point(theta), v) <= 1.0;
            if (std::abs(dist(c.point(theta), v) - 1.0) < 1e-9) continue;
            if (arc.contains(theta, tol.angle_eps) != inside) ++mismatches;
        }
        CHECK(mismatches == 0);
        // Closed form: half-width acos(D / rho) around angle 0.
        const double r = std::sqrt(3.0) / 2.0;
        const double big_d = (3.0 + r * r - 1.0) / (2.0 * r);
        const double delta = std::acos(big_d / std::sqrt(3.0));
        CHECK(arc.intervals[0].length() == doctest::Approx(2 * delta).epsilon(1e-9));
    }
}

TEST_CASE("circle distance extremes") {
    const Tolerance tol;
    const Circle3 c = make_circle({0, 0, 0}, 1.0, {0, 0, 1});
    SUBCASE("in-plane point outside") {
        const DistanceExtremes ex = circle_distance_extremes(c, {2.0, 0, 0}, tol);
        CHECK(ex.theta_min == doctest::Approx(0.0));
        CHECK(ex.theta_max == doctest::Approx(kPi));
    }
    SUBCASE("point on the circle") {
        const double theta0 = 1.234;
        const DistanceExtremes ex = circle_distance_extremes(c, c.point(theta0), tol);
        CHECK(ex.theta_min == doctest::Approx(theta0).epsilon(1e-12));
    }
    SUBCASE("off-plane random points against dense argmin") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int rep = 0; rep < 20; ++rep) {
            const Point3 v{u(rng), u(rng), u(rng)};
            if ((v - c.normal * dot(v, c.normal)).norm() < 1e-2) continue;
            const DistanceExtremes ex = circle_distance_extremes(c, v, tol);
            double best = 1e100, best_theta = 0;
            for (int i = 0; i < 1000000; ++i) {
                const double t = kTwoPi * i / 1000000;
                const double d = dist(c.point(t), v);
                if (d < best) {
                    best = d;
                    best_theta = t;
                }
            }
            const double dev = std::min(wrap_angle(best_theta - ex.theta_min),
                                        wrap_angle(ex.theta_min - best_theta));
            CHECK(dev < 1e-5);
        }
    }
    SUBCASE("axis point is degenerate") {
        CHECK_THROWS_AS(circle_distance_extremes(c, {0, 0, 0.4}, tol), Error);
    }
}

TEST_CASE("angular interval sets") {
    const double eps = 1e-9;
    SUBCASE("full is the identity") {
        AngularIntervalSet x = make_interval_set({{0.5, 2.5}}, eps);
        const auto r = interval_set_intersect(AngularIntervalSet::full(), x, eps);
        REQUIRE(r.intervals.size() == 1);
        CHECK(r.intervals[0].start == doctest::Approx(0.5));
        CHECK(r.intervals[0].end == doctest::Approx(2.5));
    }
    SUBCASE("plain overlap") {
        const auto a = make_interval_set({{0.0, kPi}}, eps);
        const auto b = make_interval_set({{kPi / 2, 3 * kPi / 2}}, eps);
        const auto r = interval_set_intersect(a, b, eps);
        REQUIRE(r.intervals.size() == 1);
        CHECK(r.intervals[0].start == doctest::Approx(kPi / 2));
        CHECK(r.intervals[0].end == doctest::Approx(kPi));
    }
    SUBCASE("wrapping operand") {
        const auto a = make_interval_set({{3 * kPi / 2, kPi / 4}}, eps);
        const auto b = make_interval_set({{0.0, kPi / 2}}, eps);
        const auto r = interval_set_intersect(a, b, eps);
        REQUIRE(r.intervals.size() == 1);
        CHECK(r.intervals[0].start == doctest::Approx(0.0));
        CHECK(r.intervals[0].end == doctest::Approx(kPi / 4));
        // Membership oracle on a grid against both operands.
        for (int i = 0; i < 10000; ++i) {
            const double t = kTwoPi * i / 10000;
            const bool expect = a.contains(t, eps) && b.contains(t, eps);
            CHECK(r.contains(t, 4 * eps) == expect);
        }
    }
    SUBCASE("near-touching closed arcs leave a point component") {
        const auto a = make_interval_set({{0.0, 1.0}}, eps);
        const auto b = make_interval_set({{1.0 + 2e-10, 2.0}}, eps);
        const auto r = interval_set_intersect(a, b, eps);
        REQUIRE(r.intervals.size() == 1);
        CHECK(r.intervals[0].is_point(eps));
    }
    SUBCASE("disjoint") {
        const auto a = make_interval_set({{0.0, 1.0}}, eps);
        const auto b = make_interval_set({{2.0, 3.0}}, eps);
        CHECK(interval_set_intersect(a, b, eps).is_empty());
    }
}

TEST_CASE("spherical hull membership") {
    const Tolerance tol;
    const Point3 apex{0.2, -0.1, 0.3};
    const Vec3 g1 = normalized(Vec3{1, 0.2, 0.1});
    const Vec3 g2 = normalized(Vec3{-0.3, 1, 0});
    const Vec3 g3 = normalized(Vec3{0, -0.2, 1});
    const std::vector<Point3> gens = {apex + g1, apex + g2, apex + g3};

    SUBCASE("generators belong to their own hull") {
        for (const auto& g : gens) CHECK(spherical_hull_membership(apex, gens, g, tol));
    }
    SUBCASE("antipode of a single generator is outside") {
        CHECK_FALSE(spherical_hull_membership(apex, {apex + g1}, apex - g1, tol));
    }
    SUBCASE("geodesic midpoint of two generators is inside") {
        const Point3 mid = apex + normalized(g1 + g2);
        CHECK(spherical_hull_membership(apex, {apex + g1, apex + g2}, mid, tol));
        // A point far off the cone is not.
        CHECK_FALSE(spherical_hull_membership(apex, {apex + g1, apex + g2}, apex - g3, tol));
    }
    SUBCASE("off-sphere points are rejected") {
        CHECK_THROWS_AS(spherical_hull_membership(apex, gens, apex + g1 * 1.5, tol), Error);
    }
}
