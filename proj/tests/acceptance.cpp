// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are pinned in the checks.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "ballpoly/duality.hpp"
#include "ballpoly/generators.hpp"
#include "ballpoly/selftest.hpp"
#include "ballpoly/vazsonyi.hpp"

using namespace ballpoly;

namespace {

int g_failures = 0;

void run(int id, const std::string& title, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<Configuration> extremal_families() {
    std::vector<Configuration> fams;
    for (int k = 2; k <= 8; ++k) fams.push_back(suspended_polygon(k));
    fams.push_back(tetrahedron_with_arc_points({{{1, 2}, 1}}));
    fams.push_back(tetrahedron_with_arc_points({{{0, 1}, 2}, {{0, 2}, 1}, {{0, 3}, 1}}));
    for (int k = 2; k <= 6; ++k) fams.push_back(ball_truncate(suspended_polygon(k), 2 * k - 1, 0.05));
    {
        const Configuration tet = tetrahedron_with_arc_points({});
        fams.push_back(add_dangling_vertices(tet, {{0, 0.5}}).config);
        const FaceComplex fc = build_face_complex(tet);
        const SelfDuality d = canonical_duality(fc);
        int e1 = -1;
        for (int e = 1; e < fc.e_count(); ++e)
            if (e != d.edge_to_edge[0]) {
                e1 = e;
                break;
            }
        fams.push_back(add_dangling_vertices(tet, {{0, 0.35}, {e1, 0.6}}).config);
    }
    return fams;
}

std::vector<Configuration> two_pole_sweep() {
    std::vector<Configuration> out;
    const std::vector<double> heights = {0.35, 0.5, 0.65, 0.8};
    int case_id = 0;
    for (double h : heights) {
        for (int n = 2; n <= 6 && case_id < 50; ++n) {
            for (int pattern = 0; pattern < 3 && case_id < 50; ++pattern, ++case_id) {
                TwoPoleSpec spec;
                spec.h = h;
                // Staggered marks keep every gap away from a semicircle.
                for (int i = 0; i < n; ++i)
                    spec.mark_angles.push_back(kTwoPi * i / n + 0.07 * pattern +
                                               0.3 * std::sin(i * 1.3));
                spec.gap_points.assign(n, {});
                switch (pattern) {
                    case 0: // all gaps occupied once
                        for (int i = 0; i < n; ++i) spec.gap_points[i] = {0.5};
                        break;
                    case 1: // alternating, first gap twice
                        spec.gap_points[0] = {0.4, 0.6};
                        for (int i = 2; i < n; i += 2) spec.gap_points[i] = {0.5};
                        break;
                    default: // single occupied gap
                        spec.gap_points[0] = {0.5};
                        break;
                }
                out.push_back(two_pole_family(spec).config);
            }
        }
    }
    // A long-gap instance (marks confined to a quarter circle).
    TwoPoleSpec spec;
    spec.h = 0.6;
    spec.mark_angles = {0.0, 0.7, 1.4};
    spec.gap_points = {{0.5}, {0.5}, {}};
    out.push_back(two_pole_family(spec).config);
    return out;
}

bool criterion1(std::string& detail) {
    for (int k = 2; k <= 8; ++k) {
        const Configuration v = suspended_polygon(k);
        const int n = 2 * k;
        const DiameterGraph g = diameter_graph(v);
        if (static_cast<int>(g.e_count()) != 2 * n - 2) {
            detail = "k=" + std::to_string(k) + " has " + std::to_string(g.e_count()) + " diameters";
            return false;
        }
        for (const auto& e : g.edges) {
            double d = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    if ((v.labels()[i] == e[0] && v.labels()[j] == e[1]) ||
                        (v.labels()[i] == e[1] && v.labels()[j] == e[0]))
                        d = dist(v[i], v[j]);
            if (std::abs(d - 1.0) > 1e-9) {
                detail = "diameter pair deviates from unit length";
                return false;
            }
        }
    }
    return true;
}

bool criterion2(std::string& detail) {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> nd(4, 40);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = nd(rng);
        std::vector<Point3> pts;
        for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng), u(rng)});
        Configuration v(pts);
        v = v.scaled(1.0 / v.diameter());
        if (diameter_graph(v).e_count() > static_cast<std::size_t>(2 * n - 2)) {
            detail = "bound violated at rep " + std::to_string(rep);
            return false;
        }
    }
    return true;
}

bool criterion3(std::string& detail) {
    int checked = 0;
    for (const auto& v : extremal_families()) {
        if (!check_extremal(v).ghs_cross_check) {
            detail = "extremal family failed the structural criterion";
            return false;
        }
        ++checked;
    }
    // Non-extremal families: the two criteria must agree on "false".
    for (int n : {5, 7}) {
        const auto verdict = check_extremal(rugby_ball(n, {.reuleaux = true}));
        if (verdict.is_extremal || verdict.ghs_cross_check) {
            detail = "polygon ring misclassified";
            return false;
        }
        ++checked;
    }
    for (const auto& v : two_pole_sweep()) {
        if (v.size() < 4) continue;
        check_extremal(v); // throws GhsCrossCheckFailure on disagreement
        ++checked;
    }
    detail = std::to_string(checked) + " configurations";
    return true;
}

bool criterion4(std::string& detail) {
    int built = 0;
    for (const auto& v : two_pole_sweep()) {
        if (euler_characteristic(build_face_complex(v)) != 2) {
            detail = "Euler failure in the sweep";
            return false;
        }
        ++built;
    }
    for (const auto& v : extremal_families()) {
        if (euler_characteristic(build_face_complex(v)) != 2) {
            detail = "Euler failure on an extremal family";
            return false;
        }
        ++built;
    }
    detail = std::to_string(built) + " complexes";
    return true;
}

bool criterion5(std::string& detail) {
    for (int n = 3; n <= 7; ++n) {
        const auto list = enumerate_self_dualities(apexed_prism_complex(n));
        int with_fp = 0, without_fp = 0;
        for (const auto& d : list)
            (d.fixed_points.cell_fixed_point_free ? without_fp : with_fp)++;
        const int expect_fpf = (n % 2 == 1) ? 1 : 0;
        if (with_fp != n || without_fp != expect_fpf) {
            detail = "n=" + std::to_string(n) + ": " + std::to_string(with_fp) + " with, " +
                     std::to_string(without_fp) + " without fixed points";
            return false;
        }
    }
    return true;
}

bool criterion6(std::string& detail) {
    std::vector<Configuration> cases;
    for (int k = 2; k <= 6; ++k) {
        cases.push_back(suspended_polygon(k));
        cases.push_back(ball_truncate(suspended_polygon(k), 2 * k - 1, 0.05));
    }
    for (const auto& v : cases) {
        const FaceComplex fc = build_face_complex(v);
        const SelfDuality d = canonical_duality(fc); // involution + order reversal verified inside
        const auto rep = fixed_point_report(d, barycentric_subdivision(fc));
        if (!rep.cell_fixed_point_free || !rep.vertex_disjoint) {
            detail = "fixed point found";
            return false;
        }
    }
    detail = std::to_string(cases.size()) + " complexes";
    return true;
}

bool criterion7(std::string& detail) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Tolerance tol;
    long long bad = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const Point3 x{0.3 * gauss(rng), 0.3 * gauss(rng), 0.3 * gauss(rng)};
        Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
        dir = normalized(dir);
        const Point3 y = x + dir * (0.1 + 0.85 * u01(rng));
        const Circle3 cxy = intersection_circle(x, y, tol);
        const double ta = kTwoPi * u01(rng);
        const double tb = wrap_angle(ta + 0.3 + u01(rng) * (kTwoPi - 0.6));
        const DualArcPair pair = make_dual_arc_pair(cxy.point(ta), cxy.point(tb), x, y, tol);
        const auto endpoints_ab = std::array<double, 2>{pair.short_arc_ab.start, pair.short_arc_ab.end};
        const auto endpoints_xy = std::array<double, 2>{pair.short_arc_xy.start, pair.short_arc_xy.end};
        const auto margin_ok = [](double t, const std::array<double, 2>& ends) {
            for (double e : ends)
                if (wrap_angle(t - e) <= 1e-9 || wrap_angle(e - t) <= 1e-9) return false;
            return true;
        };
        for (int s = 0; s < 1000; ++s) {
            const double tc = kTwoPi * u01(rng);
            const double tz = kTwoPi * u01(rng);
            if (!margin_ok(tc, endpoints_ab) || !margin_ok(tz, endpoints_xy)) continue;
            const Point3 c = pair.circle_xy.point(tc);
            const Point3 z = pair.circle_ab.point(tz);
            const DistanceClass cls = dual_arc_distance_classify(pair, c, z, tol);
            const double d = dist(c, z);
            if ((cls == DistanceClass::greater_than_1 && d < 1.0 - 1e-9) ||
                (cls == DistanceClass::less_than_1 && d > 1.0 + 1e-9) ||
                cls == DistanceClass::equal_1)
                ++bad;
        }
    }
    detail = std::to_string(bad) + " misclassifications";
    return bad == 0;
}

bool criterion8(std::string& detail) {
    for (const auto& v : extremal_families()) {
        const FaceComplex fc = build_face_complex(v);
        for (const auto& e : fc.edges)
            if (!(e.interval.length() < kPi - 1e-9)) {
                detail = "long edge on an extremal body";
                return false;
            }
    }
    return true;
}

bool criterion9(std::string& detail) {
    int complexes = 0;
    std::vector<Configuration> cases = extremal_families();
    for (const auto& v : two_pole_sweep()) cases.push_back(v);
    cases.push_back(rugby_ball(3, {.h = 0.5}));
    cases.push_back(rugby_ball(5, {.reuleaux = true}));
    for (const auto& v : cases) {
        const FaceComplex fc = build_face_complex(v);
        for (const auto& entry : vertex_valence_check(fc))
            if (!entry.ok) {
                detail = "valence mismatch";
                return false;
            }
        ++complexes;
    }
    detail = std::to_string(complexes) + " complexes";
    return true;
}

bool criterion10(std::string& detail) {
    std::vector<std::pair<std::string, Configuration>> cases;
    cases.push_back({"tetrahedron", tetrahedron_with_arc_points({})});
    for (int n : {3, 4, 5}) cases.push_back({"rugby" + std::to_string(n), rugby_ball(n, {.h = 0.5})});
    for (const auto& [name, v] : cases) {
        const FaceComplex fc = build_face_complex(v);
        const auto st = selftest::boundary_oracle(fc, 1000000, 1e-6, 98765);
        if (st.uncovered || st.edge_mismatch || st.vertex_mismatch) {
            detail = name + ": " + std::to_string(st.uncovered + st.edge_mismatch + st.vertex_mismatch) +
                     " disagreements";
            return false;
        }
        for (int hits : st.facet_hits)
            if (hits == 0) {
                detail = name + ": facet with no samples";
                return false;
            }
    }
    return true;
}

bool criterion11(std::string& detail) {
    const Configuration w = ball_truncate(suspended_polygon(3), 5, 0.05);
    if (w.size() != 11) {
        detail = "expected 11 points";
        return false;
    }
    const auto verdict = check_extremal(w);
    if (!verdict.is_extremal || verdict.e_count != 20) {
        detail = "expected e = 20 = 2*11 - 2";
        return false;
    }
    const FaceComplex fc = build_face_complex(w);
    if (!complexes_isomorphic(to_abstract(fc), apexed_prism_complex(5))) {
        detail = "complex is not an apexed 3-prism of base order 5";
        return false;
    }
    return true;
}

bool criterion12(std::string& detail) {
    const Configuration v = rugby_ball(5, {.reuleaux = true});
    for (int i = 0; i < 5; ++i)
        if (std::abs(dist(v[i], v[(i + 2) % 5]) - 1.0) > 1e-9) {
            detail = "main diagonal deviates";
            return false;
        }
    // The body's complex: the two sphere poles become the principal
    // vertices and all five ring points dangle.
    const FaceComplex fc = build_face_complex(v);
    int dangling = 0, principal = 0;
    for (const auto& w : fc.vertices) (w.principal ? principal : dangling)++;
    if (dangling != 5 || principal != 2) {
        detail = std::to_string(dangling) + " dangling, " + std::to_string(principal) + " principal";
        return false;
    }
    return true;
}

} // namespace

int main() {
    run(1, "suspension families meet the diameter bound exactly", 1.0, criterion1);
    run(2, "random configurations respect the diameter bound", 10.0, criterion2);
    run(3, "count and vertex-set criteria agree everywhere", 30.0, criterion3);
    run(4, "Euler relation across the construction sweep", 30.0, criterion4);
    run(5, "apexed prisms have n+[n odd] involutory self-dualities", 60.0, criterion5);
    run(6, "canonical duality is a strong self-duality", 60.0, criterion6);
    run(7, "dual-arc distance classification", 30.0, criterion7);
    run(8, "every extremal edge is a short arc", 10.0, criterion8);
    run(9, "skeleton valences equal unit-distance counts", 10.0, criterion9);
    run(10, "brute-force boundary strata match the complex", 60.0, criterion10);
    run(11, "ball-truncated pentagon is an apexed 3-prism", 10.0, criterion11);
    run(12, "tuned ring: unit diagonals and five dangling vertices", 1.0, criterion12);
    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
