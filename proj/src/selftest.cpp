#include "ballpoly/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "ballpoly/duality.hpp"
#include "ballpoly/generators.hpp"
#include "ballpoly/io.hpp"
#include "ballpoly/vazsonyi.hpp"

namespace ballpoly::selftest {

namespace {

using Rng = std::mt19937_64;

Point3 random_in_ball(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    while (true) {
        const Point3 p{u(rng), u(rng), u(rng)};
        if (p.norm() <= radius) return p;
    }
}

Vec3 random_unit(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    while (true) {
        const Vec3 v{g(rng), g(rng), g(rng)};
        if (v.norm() > 1e-6) return normalized(v);
    }
}

Configuration random_configuration(Rng& rng, int n, double radius) {
    std::vector<Point3> pts;
    while (static_cast<int>(pts.size()) < n) {
        const Point3 p = random_in_ball(rng, radius);
        bool ok = true;
        for (const auto& q : pts)
            if (dist(p, q) < 1e-4) ok = false;
        if (ok) pts.push_back(p);
    }
    return Configuration(std::move(pts));
}

Configuration normalized_diameter(const Configuration& v) {
    return v.scaled(1.0 / v.diameter());
}

Circle3 random_circle(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    return make_circle(random_in_ball(rng, 1.0), 0.05 + 0.95 * u01(rng), random_unit(rng));
}

// Small battery of extremal families used by several checks.
std::vector<Configuration> extremal_battery() {
    std::vector<Configuration> out;
    for (int k = 2; k <= 6; ++k) out.push_back(suspended_polygon(k));
    out.push_back(tetrahedron_with_arc_points({}));
    out.push_back(tetrahedron_with_arc_points({{{1, 2}, 1}}));
    out.push_back(tetrahedron_with_arc_points({{{0, 1}, 2}, {{0, 2}, 1}, {{0, 3}, 1}}));
    out.push_back(tetrahedron_with_arc_points({{{1, 2}, 1}, {{2, 3}, 1}, {{3, 1}, 1}}));
    out.push_back(ball_truncate(suspended_polygon(3), 5, 0.05));
    return out;
}

struct Runner {
    std::vector<CheckResult> results;
    std::ostream* log;

    void record(const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, detail});
        if (log) *log << (ok ? "ok   " : "FAIL ") << name << (detail.empty() ? "" : " - " + detail)
                      << '\n';
    }

    template <typename F>
    void check(const std::string& name, F&& fn) {
        try {
            auto [ok, detail] = fn();
            record(name, ok, detail);
        } catch (const std::exception& e) {
            record(name, false, std::string("exception: ") + e.what());
        }
    }
};

using Outcome = std::pair<bool, std::string>;

// ---------------------------------------------------------------------------
// geom-core
// ---------------------------------------------------------------------------

Outcome check_circle_point_distance(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        const Point3 p = random_in_ball(rng, 1.0);
        const Point3 q = p + random_unit(rng) * (0.05 + 1.85 * u01(rng));
        const Circle3 c = intersection_circle(p, q);
        for (int j = 0; j < 100; ++j) {
            const double theta = kTwoPi * u01(rng);
            worst = std::max(worst, std::abs(dist(c.point(theta), p) - 1.0));
            worst = std::max(worst, std::abs(dist(c.point(theta), q) - 1.0));
        }
    }
    return {worst <= 1e-12, "worst |dist-1| = " + std::to_string(worst)};
}

Outcome check_ball_arc_agreement(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const Tolerance tol;
    long long mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const Circle3 c = random_circle(rng);
        const Point3 v = random_in_ball(rng, 2.2);
        const AngularIntervalSet arc = ball_arc_on_circle(c, v, tol);
        for (int j = 0; j < 10000; ++j) {
            const double theta = kTwoPi * u01(rng);
            const double d = dist(c.point(theta), v);
            if (std::abs(d - 1.0) <= tol.eq_dist) continue; // boundary band exempt
            if (arc.contains(theta, tol.angle_eps) != (d < 1.0)) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches of 1e7"};
}

Outcome check_circumball(Rng& rng) {
    std::uniform_int_distribution<int> nd(1, 16);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Point3> pts;
        const int n = nd(rng);
        for (int i = 0; i < n; ++i) pts.push_back(random_in_ball(rng, 1.0));
        const Ball b = circumball(pts);
        double maxd = 0;
        for (const auto& p : pts) maxd = std::max(maxd, dist(p, b.center));
        if (std::abs(maxd - b.radius) > 1e-12)
            return {false, "radius mismatch " + std::to_string(std::abs(maxd - b.radius))};
        for (int k = 0; k < 1000; ++k) {
            const Point3 c2 = b.center + random_unit(rng) * 1e-6;
            double m2 = 0;
            for (const auto& p : pts) m2 = std::max(m2, dist(p, c2));
            if (m2 < b.radius - 1e-12)
                return {false, "perturbation improved the enclosing radius"};
        }
    }
    return {true, ""};
}

AngularIntervalSet random_interval_set(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<int> kd(0, 3);
    const int k = kd(rng);
    if (k == 0 && u01(rng) < 0.3) return AngularIntervalSet::full();
    std::vector<AngularInterval> ivs;
    for (int i = 0; i < k; ++i) {
        const double s = kTwoPi * u01(rng);
        ivs.push_back({s, wrap_angle(s + kTwoPi * u01(rng) * 0.6)});
    }
    return make_interval_set(std::move(ivs), 1e-9);
}

bool sets_agree(const AngularIntervalSet& a, const AngularIntervalSet& b, Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double eps = 1e-9;
    for (int i = 0; i < 2000; ++i) {
        const double theta = kTwoPi * u01(rng);
        // Skip angles near any boundary of either set.
        bool near = false;
        for (const auto* s : {&a, &b})
            for (const auto& iv : s->intervals)
                for (double t : {iv.start, iv.end})
                    if (wrap_angle(theta - t) < 4 * eps || wrap_angle(t - theta) < 4 * eps)
                        near = true;
        if (near) continue;
        if (a.contains(theta) != b.contains(theta)) return false;
    }
    return true;
}

Outcome check_interval_algebra(Rng& rng) {
    const double eps = 1e-9;
    for (int rep = 0; rep < 300; ++rep) {
        const AngularIntervalSet a = random_interval_set(rng);
        const AngularIntervalSet b = random_interval_set(rng);
        const AngularIntervalSet c = random_interval_set(rng);
        if (!sets_agree(interval_set_intersect(a, b, eps), interval_set_intersect(b, a, eps), rng))
            return {false, "intersection is not commutative"};
        const auto ab_c = interval_set_intersect(interval_set_intersect(a, b, eps), c, eps);
        const auto a_bc = interval_set_intersect(a, interval_set_intersect(b, c, eps), eps);
        if (!sets_agree(ab_c, a_bc, rng)) return {false, "intersection is not associative"};
        if (!sets_agree(interval_set_intersect(AngularIntervalSet::full(), a, eps), a, rng))
            return {false, "full circle is not an identity"};
    }
    return {true, ""};
}

Outcome check_distance_extremes(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int rep = 0; rep < 1000; ++rep) {
        const Circle3 c = random_circle(rng);
        const Point3 v = random_in_ball(rng, 2.0);
        const Vec3 d = v - c.center;
        if ((d - c.normal * dot(d, c.normal)).norm() < 1e-3) continue;
        const DistanceExtremes ex = circle_distance_extremes(c, v);
        // Dense argmin must land near theta_min.
        double best = 1e100, best_theta = 0;
        const int samples = 20000;
        for (int i = 0; i < samples; ++i) {
            const double t = kTwoPi * i / samples;
            const double dd = dist(c.point(t), v);
            if (dd < best) {
                best = dd;
                best_theta = t;
            }
        }
        const double dev = std::min(wrap_angle(best_theta - ex.theta_min),
                                    wrap_angle(ex.theta_min - best_theta));
        if (dev > 1e-3) return {false, "argmin deviates by " + std::to_string(dev)};
        // Monotone growth along both half-circles.
        for (int half = 0; half < 2; ++half) {
            double prev = dist(c.point(ex.theta_min), v);
            for (int i = 1; i <= 50; ++i) {
                const double t = ex.theta_min + (half ? -1 : 1) * kPi * i / 50.0;
                const double dd = dist(c.point(t), v);
                if (dd < prev - 1e-12) return {false, "distance not monotone on a half-circle"};
                prev = dd;
            }
        }
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// ball-hull
// ---------------------------------------------------------------------------

Outcome check_tighten_idempotent(Rng& rng) {
    std::uniform_int_distribution<int> nd(4, 10);
    for (int rep = 0; rep < 1000; ++rep) {
        const Configuration v = random_configuration(rng, nd(rng), 0.45);
        const Configuration t1 = tighten(v);
        const Configuration t2 = tighten(t1);
        if (t1.labels() != t2.labels()) return {false, "tighten is not idempotent"};
    }
    return {true, ""};
}

Outcome check_essential_monotone(Rng& rng) {
    std::uniform_int_distribution<int> nd(5, 9);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int rep = 0; rep < 150; ++rep) {
        const Configuration v = random_configuration(rng, nd(rng), 0.45);
        const EssentialityReport rep_full = essential_points(v);
        // Random subset keeping at least 2 points.
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (u01(rng) < 0.7) keep.push_back(i);
        if (keep.size() < 2) continue;
        const Configuration sub = v.subset(keep);
        const EssentialityReport rep_sub = essential_points(sub);
        for (int label : rep_full.essential)
            if (std::count(sub.labels().begin(), sub.labels().end(), label) &&
                !rep_sub.essential.count(label))
                return {false, "essential point lost essentiality in a subset"};
    }
    return {true, ""};
}

Outcome check_property_k(Rng& rng) {
    std::uniform_int_distribution<int> nd(2, 12);
    std::uniform_real_distribution<double> sd(0.85, 1.15);
    for (int rep = 0; rep < 300; ++rep) {
        Configuration v = random_configuration(rng, nd(rng), 0.5);
        v = v.scaled(sd(rng) / v.diameter());
        bool all_in = true;
        for (const auto& p : v.points())
            if (!in_ball_set(v, p)) all_in = false;
        const bool diam_le_1 = v.diameter() <= 1.0 + v.tol().eq_dist;
        if (std::abs(v.diameter() - 1.0) <= 2 * v.tol().eq_dist) continue; // boundary band
        if (all_in != diam_le_1) return {false, "containment does not match diameter"};
    }
    return {true, ""};
}

Outcome check_spindle_consistency(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const Tolerance tol;
    for (int rep = 0; rep < 100; ++rep) {
        const Point3 a = random_in_ball(rng, 0.5);
        const Point3 b = a + random_unit(rng) * (0.2 + 1.5 * u01(rng));
        const Point3 mid = (a + b) * 0.5;
        for (int xs = 0; xs < 10; ++xs) {
            const Point3 x = mid + random_unit(rng) * (u01(rng) * 1.2);
            const bool inside = spindle_contains(a, b, x, tol);
            if (inside) {
                // Necessary direction: every sampled admissible center keeps x close.
                int tested = 0;
                for (int k = 0; k < 4000 && tested < 1000; ++k) {
                    const Point3 c = mid + random_in_ball(rng, 1.0);
                    if (dist(c, a) > 1.0 || dist(c, b) > 1.0) continue;
                    ++tested;
                    if (dist(x, c) > 1.0 + 1e-7)
                        return {false, "point in the spindle misses a containing ball"};
                }
            }
        }
        // Endpoints and the midpoint always belong to the spindle.
        if (dist(a, b) < 2.0) {
            if (!spindle_contains(a, b, a, tol) || !spindle_contains(a, b, b, tol) ||
                !spindle_contains(a, b, mid, tol))
                return {false, "endpoint or midpoint not in the spindle"};
        }
    }
    return {true, ""};
}

Outcome check_separating_ball(Rng& rng) {
    std::uniform_int_distribution<int> nd(1, 8);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<Point3> s;
        const int n = nd(rng);
        for (int i = 0; i < n; ++i) s.push_back(random_in_ball(rng, 0.4));
        const Point3 z = random_in_ball(rng, 2.0);
        try {
            const Ball b = separating_ball(s, z);
            for (const auto& p : s)
                if (dist(b.center, p) > 1.0 + 1e-9) return {false, "separating ball misses the set"};
            if (dist(b.center, z) <= 1.0) return {false, "separating ball contains the point"};
        } catch (const Error& e) {
            if (e.code() != Errc::NotSeparable) throw;
        }
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// face-complex and vazsonyi
// ---------------------------------------------------------------------------

Outcome check_complex_invariants(Rng& rng) {
    std::vector<std::pair<std::string, Configuration>> cases;
    for (const auto& v : extremal_battery()) cases.push_back({"extremal", v});
    cases.push_back({"rugby3", rugby_ball(3, {.h = 0.5})});
    cases.push_back({"rugby5r", rugby_ball(5, {.reuleaux = true})});
    cases.push_back({"rugby5r+poles", rugby_ball(5, {.reuleaux = true, .include_poles = true})});
    {
        TwoPoleSpec spec;
        spec.h = 0.6;
        spec.mark_angles = {0.3, 1.8, 3.6, 5.1};
        spec.gap_points = {{0.5}, {}, {0.35, 0.65}, {0.5}};
        cases.push_back({"two-pole", two_pole_family(spec).config});
    }
    std::uint64_t sub_seed = rng();
    for (const auto& [name, v] : cases) {
        const FaceComplex fc = build_face_complex(v);
        if (euler_characteristic(fc) != 2) return {false, name + ": Euler relation violated"};
        if (!is_two_connected(fc)) return {false, name + ": skeleton not 2-connected"};
        for (const auto& e : vertex_valence_check(fc))
            if (!e.ok) return {false, name + ": valence census mismatch"};
        for (const auto& f : fc.facets) {
            int principal = 0;
            for (int vid : f.boundary_vertices)
                if (fc.vertices[vid].principal) ++principal;
            if (principal < 2) return {false, name + ": facet with < 2 principal vertices"};
        }
        const BoundaryOracleStats st = boundary_oracle(fc, 10000, 1e-6, sub_seed++);
        if (st.uncovered || st.edge_mismatch || st.vertex_mismatch)
            return {false, name + ": boundary oracle disagreements"};
        // Isolated components carry at least 4 unit-distance generators.
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (dist(v[i], v[j]) >= 2.0 - v.tol().eq_dist) continue;
                const auto comps = facet_components(v.labels()[i], v.labels()[j], v);
                if (comps.component_count() > v.size() - 2)
                    return {false, name + ": component count exceeds the bound"};
                const Circle3 circle = intersection_circle(v[i], v[j], v.tol());
                for (const auto& iv : comps.intervals) {
                    if (!iv.is_point(v.tol().angle_eps)) continue;
                    const Point3 pt = circle.point(iv.midpoint());
                    int at_one = 0;
                    for (const auto& g : v.points())
                        if (std::abs(dist(pt, g) - 1.0) <= 2 * v.tol().vertex_merge) ++at_one;
                    if (at_one < 4) return {false, name + ": isolated point on < 4 facets"};
                }
            }
    }
    return {true, ""};
}

Outcome check_facet_convexity(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 1 << 20);
    for (const auto& v : extremal_battery()) {
        const FaceComplex fc = build_face_complex(v);
        for (int rep = 0; rep < 1000; ++rep) {
            const FcFacet& f = fc.facets[pick(rng) % fc.facets.size()];
            std::vector<int> verts = f.boundary_vertices;
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            if (verts.size() < 2) continue;
            const int a = verts[pick(rng) % verts.size()];
            const int b = verts[pick(rng) % verts.size()];
            if (a == b) continue;
            const Point3 y = fc.generator_point(f.generator);
            const Vec3 da = fc.vertices[a].position - y;
            const Vec3 db = fc.vertices[b].position - y;
            if ((da + db).norm() < 1e-9) continue;
            const Point3 m = y + normalized(da + db);
            bool spans_edge = false;
            for (int eid : f.boundary_edges) {
                const auto& ep = fc.edges[eid].endpoints;
                if ((ep[0] == a && ep[1] == b) || (ep[0] == b && ep[1] == a)) spans_edge = true;
            }
            double margin = 2.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v.labels()[i] == f.generator) continue;
                margin = std::min(margin, 1.0 - dist(m, v[i]));
            }
            if (spans_edge ? (margin < -v.tol().eq_dist) : (margin <= v.tol().eq_dist))
                return {false, "geodesic midpoint left the facet"};
        }
    }
    return {true, ""};
}

Outcome check_ghs_bound(Rng& rng) {
    std::uniform_int_distribution<int> nd(4, 40);
    for (int rep = 0; rep < 1000; ++rep) {
        const Configuration v = normalized_diameter(random_configuration(rng, nd(rng), 0.5));
        const DiameterGraph g = diameter_graph(v);
        if (g.e_count() > 2 * v.size() - 2) return {false, "diameter bound exceeded"};
        // Jung: unit diameter forces circumradius at most sqrt(3/8).
        if (v.circumradius() > std::sqrt(3.0 / 8.0) + v.tol().eq_dist)
            return {false, "circumradius exceeds the unit-diameter bound"};
    }
    return {true, ""};
}

Outcome check_extremal_agreement(Rng&) {
    // check_extremal throws GhsCrossCheckFailure on any disagreement.
    for (const auto& v : extremal_battery()) {
        const auto verdict = check_extremal(v);
        if (!verdict.is_extremal) return {false, "battery configuration not extremal"};
        for (const auto& [label, val] : verdict.valences)
            if (val < 2) return {false, "extremal configuration with valence < 2"};
    }
    // Non-extremal side: both criteria must come out false together.
    const auto rugby = rugby_ball(5, {.reuleaux = true});
    if (check_extremal(rugby).is_extremal) return {false, "polygon ring misreported as extremal"};
    {
        TwoPoleSpec spec;
        spec.h = 0.55;
        spec.mark_angles = {0.2, 1.9, 3.8};
        spec.gap_points = {{0.5}, {0.5}, {}};
        const auto v = two_pole_family(spec).config;
        if (v.size() >= 4 && check_extremal(v).is_extremal)
            return {false, "two-pole family misreported as extremal"};
    }
    return {true, ""};
}

Outcome check_short_edges(Rng&) {
    for (const auto& v : extremal_battery()) {
        const FaceComplex fc = build_face_complex(v);
        for (const auto& e : fc.edges)
            if (!edge_is_short(fc, e.id)) return {false, "long edge on an extremal body"};
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

Outcome check_dual_arc_classification(Rng& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const Tolerance tol;
    long long bad = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const Point3 x = random_in_ball(rng, 0.4);
        const Point3 y = x + random_unit(rng) * (0.15 + 0.8 * u01(rng));
        const Circle3 cxy = intersection_circle(x, y, tol);
        const double ta = kTwoPi * u01(rng);
        double tb = kTwoPi * u01(rng);
        if (wrap_angle(tb - ta) < 0.2 || wrap_angle(ta - tb) < 0.2) tb = wrap_angle(ta + 1.0);
        const DualArcPair pair = make_dual_arc_pair(cxy.point(ta), cxy.point(tb), x, y, tol);
        for (int s = 0; s < 1000; ++s) {
            const double margin = 1e-6;
            const auto sample_angle = [&](const AngularInterval& short_iv) {
                // Stay away from both endpoints of the short arc.
                double t = kTwoPi * u01(rng);
                for (int guard = 0; guard < 64; ++guard) {
                    const bool near = wrap_angle(t - short_iv.start) < margin ||
                                      wrap_angle(short_iv.start - t) < margin ||
                                      wrap_angle(t - short_iv.end) < margin ||
                                      wrap_angle(short_iv.end - t) < margin;
                    if (!near) break;
                    t = kTwoPi * u01(rng);
                }
                return t;
            };
            const Point3 c = pair.circle_xy.point(sample_angle(pair.short_arc_ab));
            const Point3 z = pair.circle_ab.point(sample_angle(pair.short_arc_xy));
            const DistanceClass cls = dual_arc_distance_classify(pair, c, z, tol);
            const double d = dist(c, z);
            if ((cls == DistanceClass::greater_than_1 && d < 1.0 - 1e-9) ||
                (cls == DistanceClass::less_than_1 && d > 1.0 + 1e-9))
                ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " misclassifications of 1e6"};
}

Outcome check_canonical_duality(Rng&) {
    for (const auto& v : extremal_battery()) {
        const FaceComplex fc = build_face_complex(v);
        const SelfDuality d = canonical_duality(fc);
        // Dual edges are both short.
        for (const auto& e : fc.edges)
            if (!e.is_short || !fc.edges[d.edge_to_edge[e.id]].is_short)
                return {false, "dual edge pair not short"};
        const FlagComplex k = barycentric_subdivision(fc);
        const FixedPointReport rep = fixed_point_report(d, k);
        if (!rep.cell_fixed_point_free || !rep.vertex_disjoint)
            return {false, "canonical duality has a fixed cell"};
    }
    return {true, ""};
}

Outcome check_dangling_bookkeeping(Rng&) {
    const Configuration tet = tetrahedron_with_arc_points({});
    const FaceComplex fc = build_face_complex(tet);
    const SelfDuality dual = canonical_duality(fc);

    const int eid = 0;
    const FcEdge& e = fc.edges[eid];
    const int dual_eid = dual.edge_to_edge[eid];
    const DanglingResult res = add_dangling_vertices(tet, {{eid, 0.5}});

    const FaceComplex fc2 = build_face_complex(res.config);
    const SelfDuality dual2 = canonical_duality(fc2);
    (void)dual2;

    const int u_label = res.changes[0].new_label;
    // The new point is a dangling vertex.
    bool found_dangling = false;
    for (const auto& w : fc2.vertices)
        if (w.config_label == u_label && !w.principal) found_dangling = true;
    if (!found_dangling) return {false, "added point is not a dangling vertex"};

    const auto edge_with = [&](const FaceComplex& c, std::array<int, 2> endpoint_labels,
                               std::array<int, 2> gens) {
        std::sort(endpoint_labels.begin(), endpoint_labels.end());
        std::sort(gens.begin(), gens.end());
        for (const auto& ed : c.edges) {
            std::array<int, 2> ep{c.vertices[ed.endpoints[0]].config_label,
                                  c.vertices[ed.endpoints[1]].config_label};
            std::sort(ep.begin(), ep.end());
            if (ep == endpoint_labels && ed.generators == gens) return true;
        }
        return false;
    };
    const std::array<int, 2> e_ends{fc.vertices[e.endpoints[0]].config_label,
                                    fc.vertices[e.endpoints[1]].config_label};
    // e split into (x,u) and (u,y) on the same carrier pair.
    if (!edge_with(fc2, {e_ends[0], u_label}, e.generators) ||
        !edge_with(fc2, {e_ends[1], u_label}, e.generators))
        return {false, "edge was not split at the dangling vertex"};
    // The dual edge disappeared, replaced by the duals of the halves.
    const FcEdge& f = fc.edges[dual_eid];
    const std::array<int, 2> f_ends{fc.vertices[f.endpoints[0]].config_label,
                                    fc.vertices[f.endpoints[1]].config_label};
    if (edge_with(fc2, f_ends, f.generators)) return {false, "dual edge survived the split"};
    if (!edge_with(fc2, f_ends, {e_ends[0], u_label}) ||
        !edge_with(fc2, f_ends, {e_ends[1], u_label}))
        return {false, "replacement dual edges missing"};

    // A placement pair on dual edges must be rejected.
    try {
        add_dangling_vertices(tet, {{eid, 0.4}, {dual_eid, 0.6}});
        return {false, "dual-edge conflict was not rejected"};
    } catch (const Error& err) {
        if (err.code() != Errc::DualEdgeConflict) throw;
    }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// generators and io
// ---------------------------------------------------------------------------

Outcome check_generator_distances(Rng&) {
    for (int k = 2; k <= 8; ++k) {
        const Configuration v = suspended_polygon(k);
        const int m = 2 * k - 1;
        for (int i = 0; i < m; ++i) {
            if (std::abs(dist(v[i], v[m]) - 1.0) > 1e-12)
                return {false, "apex distance deviates"};
            const int opp = (i + m / 2) % m;
            if (std::abs(dist(v[i], v[opp]) - 1.0) > 1e-12)
                return {false, "main diagonal deviates"};
        }
    }
    // Adjacent-arc points stay below unit distance, opposite arcs exceed it.
    const auto adj = tetrahedron_with_arc_points({{{0, 1}, 2}, {{0, 2}, 2}});
    for (std::size_t i = 4; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j)
            if (dist(adj[i], adj[j]) >= 1.0) return {false, "adjacent arc points too far apart"};
    {
        const std::vector<Point3> tet = tetrahedron_with_arc_points({}).points();
        const Tolerance tol;
        const Circle3 c01 = intersection_circle(tet[2], tet[3], tol); // carries arc through 0,1
        const Circle3 c23 = intersection_circle(tet[0], tet[1], tol); // carries arc through 2,3
        const auto on_arc = [&](const Circle3& c, const Point3& a, const Point3& b, double t) {
            const double ta = c.angle_of(a), tb = c.angle_of(b);
            const double ccw = wrap_angle(tb - ta);
            return c.point(ccw <= kPi ? wrap_angle(ta + t * ccw)
                                      : wrap_angle(ta - t * (kTwoPi - ccw)));
        };
        for (double s : {0.2, 0.5, 0.8})
            for (double t : {0.3, 0.7})
                if (dist(on_arc(c01, tet[0], tet[1], s), on_arc(c23, tet[2], tet[3], t)) <= 1.0)
                    return {false, "opposite arc points too close"};
    }
    return {true, ""};
}

Outcome check_truncation_core(Rng&) {
    const Configuration pent = suspended_polygon(3);
    const Configuration trunc = ball_truncate(pent, 5, 0.05);
    if (trunc.size() != 11) return {false, "truncation size mismatch"};
    const Configuration core = critical_core(trunc);
    if (core.size() != trunc.size()) return {false, "truncated body should already be critical"};
    // Degree sequence: one 5-valent ball center, five 4-valent ring
    // vertices, five 3-valent cut points.
    std::map<int, int> hist;
    for (const auto& [label, val] : diameter_graph(core).valences()) ++hist[val];
    if (hist[5] != 1 || hist[4] != 5 || hist[3] != 5)
        return {false, "unexpected degree sequence after truncation"};
    // The epsilon -> 0 limit keeps the cut points near the removed vertex.
    const Point3 apex = pent[5];
    for (double eps : {0.01, 0.002}) {
        const Configuration t = ball_truncate(pent, 5, eps);
        int near = 0;
        for (const auto& p : t.points())
            if (dist(p, apex) <= 3 * eps) ++near;
        if (near < 5) return {false, "cut points strayed beyond 3 epsilon"};
    }
    return {true, ""};
}

Outcome check_io_roundtrip(Rng& rng) {
    const Configuration v = normalized_diameter(random_configuration(rng, 9, 0.5));
    const std::string a = configuration_to_json(v);
    std::istringstream in(a);
    const Configuration w = parse_configuration(in);
    if (v.size() != w.size()) return {false, "round trip changed the size"};
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].x != w[i].x || v[i].y != w[i].y || v[i].z != w[i].z)
            return {false, "round trip changed a coordinate"};
    if (configuration_to_json(w) != a) return {false, "serialization is not stable"};
    const FaceComplex fc = build_face_complex(suspended_polygon(3));
    if (mesh_to_off(fc) != mesh_to_off(fc)) return {false, "mesh export is not deterministic"};
    if (dot_from_skeleton(fc) != dot_from_skeleton(fc)) return {false, "dot export is not deterministic"};
    return {true, ""};
}

} // namespace

// ---------------------------------------------------------------------------
// Boundary oracle
// ---------------------------------------------------------------------------

BoundaryOracleStats boundary_oracle(const FaceComplex& fc, int samples, double shell,
                                    std::uint64_t seed) {
    const Configuration& v = fc.config;
    Rng rng(seed);
    const Point3 origin = circumball(v.points()).center;

    BoundaryOracleStats st;
    st.samples = samples;
    st.facet_hits.assign(v.size(), 0);

    // Component sets per label pair, for the two-generator strata.
    std::map<std::array<int, 2>, AngularIntervalSet> comps;
    std::map<std::array<int, 2>, Circle3> circles;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (dist(v[i], v[j]) >= 2.0 - v.tol().eq_dist) continue;
            const std::array<int, 2> key{std::min(v.labels()[i], v.labels()[j]),
                                         std::max(v.labels()[i], v.labels()[j])};
            comps[key] = facet_components(key[0], key[1], v);
            circles[key] = intersection_circle(v[i], v[j], v.tol());
        }

    for (int s = 0; s < samples; ++s) {
        const Vec3 dir = random_unit(rng);
        // First sphere crossing from the interior point.
        double t_hit = 1e100;
        for (const auto& p : v.points()) {
            const Vec3 oc = origin - p;
            const double bq = dot(dir, oc);
            const double disc = bq * bq - oc.norm2() + 1.0;
            if (disc < 0) continue;
            t_hit = std::min(t_hit, -bq + std::sqrt(disc));
        }
        const Point3 x = origin + dir * t_hit;

        std::vector<int> near;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::abs(dist(x, v[i]) - 1.0) <= shell) near.push_back(v.labels()[i]);

        if (near.empty()) {
            ++st.uncovered;
            continue;
        }
        if (near.size() == 1) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v.labels()[i] == near[0]) ++st.facet_hits[i];
            continue;
        }
        if (near.size() == 2) {
            const std::array<int, 2> key{near[0], near[1]};
            const auto it = comps.find(key);
            bool ok = false;
            if (it != comps.end()) {
                const double theta = circles[key].angle_of(x);
                ok = it->second.contains(theta, 1e-4);
            }
            if (!ok) ++st.edge_mismatch;
            continue;
        }
        bool ok = false;
        for (const auto& w : fc.vertices) {
            if (dist(w.position, x) > 1e-3) continue;
            bool all = true;
            for (int l : near)
                if (!std::count(w.incident_generators.begin(), w.incident_generators.end(), l))
                    all = false;
            if (all) ok = true;
        }
        if (!ok) ++st.vertex_mismatch;
    }
    return st;
}

std::vector<CheckResult> run_all(std::uint64_t seed, std::ostream* log) {
    Runner r;
    r.log = log;
    Rng rng(seed);

    const auto with_rng = [&](auto fn) {
        return [&rng, fn]() { return fn(rng); };
    };

    r.check("geom.circle-point-distance", with_rng(check_circle_point_distance));
    r.check("geom.ball-arc-agreement", with_rng(check_ball_arc_agreement));
    r.check("geom.circumball-optimality", with_rng(check_circumball));
    r.check("geom.interval-algebra", with_rng(check_interval_algebra));
    r.check("geom.distance-extremes", with_rng(check_distance_extremes));
    r.check("ballhull.tighten-idempotent", with_rng(check_tighten_idempotent));
    r.check("ballhull.essential-monotone", with_rng(check_essential_monotone));
    r.check("ballhull.property-k", with_rng(check_property_k));
    r.check("ballhull.spindle-consistency", with_rng(check_spindle_consistency));
    r.check("ballhull.separating-ball", with_rng(check_separating_ball));
    r.check("face.complex-invariants", with_rng(check_complex_invariants));
    r.check("face.facet-convexity", with_rng(check_facet_convexity));
    r.check("vazsonyi.ghs-and-jung-bounds", with_rng(check_ghs_bound));
    r.check("vazsonyi.criteria-agreement", with_rng(check_extremal_agreement));
    r.check("vazsonyi.short-edges", with_rng(check_short_edges));
    r.check("duality.dual-arc-classification", with_rng(check_dual_arc_classification));
    r.check("duality.canonical-strong", with_rng(check_canonical_duality));
    r.check("duality.dangling-bookkeeping", with_rng(check_dangling_bookkeeping));
    r.check("generators.distances", with_rng(check_generator_distances));
    r.check("generators.truncation-core", with_rng(check_truncation_core));
    r.check("io.roundtrip-determinism", with_rng(check_io_roundtrip));
    return r.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

} // namespace ballpoly::selftest
