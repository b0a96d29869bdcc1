#include <doctest.h>

#include "ballpoly/face_complex.hpp"
#include "ballpoly/generators.hpp"
#include "ballpoly/selftest.hpp"

using namespace ballpoly;

TEST_CASE("facet pair components") {
    SUBCASE("fat rugby: one arc joining the poles per pair") {
        const Configuration v = rugby_ball(3, {.h = 0.5});
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const auto comps = facet_components(i, j, v);
                REQUIRE(comps.component_count() == 1);
                CHECK_FALSE(comps.intervals[0].is_point(v.tol().angle_eps));
                // Endpoints are the two poles of the body.
                const Circle3 c = intersection_circle(v[i], v[j], v.tol());
                const Point3 e0 = c.point(comps.intervals[0].start);
                const Point3 e1 = c.point(comps.intervals[0].end);
                CHECK(std::abs(std::abs(e0.z) - std::sqrt(1 - 0.75)) < 1e-9);
                CHECK(std::abs(e0.z + e1.z) < 1e-9);
            }
    }
    SUBCASE("fully occupied two-pole family: only isolated points") {
        TwoPoleSpec spec;
        spec.h = 0.6;
        const int n = 5;
        for (int i = 0; i < n; ++i) spec.mark_angles.push_back(kTwoPi * i / n);
        spec.gap_points.assign(n, {0.5});
        const auto fam = two_pole_family(spec);
        const auto comps = facet_components(fam.pole_p_label, fam.pole_q_label, fam.config);
        REQUIRE(comps.component_count() == n);
        for (const auto& iv : comps.intervals) CHECK(iv.is_point(fam.config.tol().angle_eps));
        CHECK(static_cast<int>(fam.isolated_marks.size()) == n);
    }
    SUBCASE("one empty gap leaves one arc") {
        TwoPoleSpec spec;
        spec.h = 0.6;
        const int n = 4;
        for (int i = 0; i < n; ++i) spec.mark_angles.push_back(kTwoPi * i / n);
        spec.gap_points = {{}, {0.5}, {0.5}, {0.5}};
        const auto fam = two_pole_family(spec);
        const auto comps = facet_components(0, 1, fam.config);
        CHECK(static_cast<int>(comps.component_count()) == fam.expected_pair_components);
        // The surviving component is the unoccupied gap arc plus its
        // neighboring isolated marks merged into endpoints.
        int arcs = 0;
        for (const auto& iv : comps.intervals)
            if (!iv.is_point(fam.config.tol().angle_eps)) ++arcs;
        CHECK(arcs == 1);
    }
}

TEST_CASE("face complex counts") {
    SUBCASE("fat rugby n=3") {
        const FaceComplex fc = build_face_complex(rugby_ball(3, {.h = 0.5}));
        CHECK(fc.v_count() == 2);
        CHECK(fc.e_count() == 3);
        CHECK(fc.f_count() == 3);
        CHECK(euler_characteristic(fc) == 2);
        for (const auto& f : fc.facets) CHECK(f.is_digonal);
        for (const auto& w : fc.vertices) {
            CHECK(w.principal);
            CHECK(w.incident_generators.size() == 3);
        }
    }
    SUBCASE("suspended pentagon") {
        const FaceComplex fc = build_face_complex(suspended_polygon(3));
        CHECK(fc.v_count() == 6);
        CHECK(fc.e_count() == 10);
        CHECK(fc.f_count() == 6);
        CHECK(euler_characteristic(fc) == 2);
    }
    SUBCASE("regular tetrahedron") {
        const FaceComplex fc = build_face_complex(tetrahedron_with_arc_points({}));
        CHECK(fc.v_count() == 4);
        CHECK(fc.e_count() == 6);
        CHECK(fc.f_count() == 4);
        CHECK(euler_characteristic(fc) == 2);
        // Brute-force stratification: every sample lands on a facet and
        // every edge/vertex stratum matches the complex.
        const auto st = selftest::boundary_oracle(fc, 100000, 1e-6, 42);
        CHECK(st.uncovered == 0);
        CHECK(st.edge_mismatch == 0);
        CHECK(st.vertex_mismatch == 0);
        for (int hits : st.facet_hits) CHECK(hits > 0);
    }
    SUBCASE("rejects non-tight input") {
        std::vector<Point3> pts = tetrahedron_with_arc_points({}).points();
        Point3 centroid{0, 0, 0};
        for (const auto& p : pts) centroid += p;
        pts.push_back(centroid / 4.0);
        CHECK_THROWS_AS(build_face_complex(Configuration(pts)), Error);
    }
    SUBCASE("two points have no complex") {
        CHECK_THROWS_AS(build_face_complex(Configuration({{0, 0, 0}, {0.5, 0, 0}})), Error);
    }
}

TEST_CASE("two-connectivity") {
    CHECK(is_two_connected(build_face_complex(rugby_ball(3, {.h = 0.5}))));
    CHECK(is_two_connected(build_face_complex(suspended_polygon(3))));
    SUBCASE("synthetic path graph has a cut vertex") {
        CHECK_FALSE(is_two_connected_graph(3, {{{0, 1}}, {{1, 2}}}));
        CHECK(is_two_connected_graph(2, {{{0, 1}}, {{0, 1}}, {{0, 1}}}));
        CHECK(is_two_connected_graph(3, {{{0, 1}}, {{1, 2}}, {{2, 0}}}));
        CHECK_FALSE(is_two_connected_graph(4, {{{0, 1}}, {{1, 2}}, {{2, 0}}, {{2, 3}}}));
    }
}

TEST_CASE("edge shortness") {
    SUBCASE("all suspended-pentagon edges are short") {
        const FaceComplex fc = build_face_complex(suspended_polygon(3));
        for (const auto& e : fc.edges) {
            CHECK(e.is_short);
            CHECK(edge_is_short(fc, e.id));
        }
    }
    SUBCASE("an untruncated long gap arc is a long edge") {
        TwoPoleSpec spec;
        spec.h = 0.6;
        spec.mark_angles = {0.0, 1.0, 2.0}; // last gap spans 2pi - 2 > pi
        spec.gap_points = {{0.5}, {0.5}, {}};
        const auto fam = two_pole_family(spec);
        const FaceComplex fc = build_face_complex(fam.config);
        int long_edges = 0;
        for (const auto& e : fc.edges)
            if (!edge_is_short(fc, e.id)) ++long_edges;
        CHECK(long_edges == 1);
        CHECK(euler_characteristic(fc) == 2);
    }
}

TEST_CASE("valence census") {
    SUBCASE("suspended pentagon: apex 5, base 3") {
        const FaceComplex fc = build_face_complex(suspended_polygon(3));
        for (const auto& entry : vertex_valence_check(fc)) {
            CHECK(entry.ok);
            CHECK((entry.skeleton_valence == 3 || entry.skeleton_valence == 5));
        }
    }
    SUBCASE("tuned polygon ring: dangling valence 2, poles valence n") {
        const FaceComplex fc = build_face_complex(rugby_ball(5, {.reuleaux = true}));
        int dangling = 0, poles = 0;
        for (const auto& entry : vertex_valence_check(fc)) {
            CHECK(entry.ok);
            if (entry.skeleton_valence == 2) ++dangling;
            if (entry.skeleton_valence == 5) ++poles;
        }
        CHECK(dangling == 5);
        CHECK(poles == 2);
    }
}
