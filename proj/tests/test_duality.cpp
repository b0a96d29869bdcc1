#include <doctest.h>

#include "ballpoly/duality.hpp"
#include "ballpoly/generators.hpp"

using namespace ballpoly;

TEST_CASE("dual arc distance classification") {
    const Tolerance tol;
    // Equilateral quadruple from the unit tetrahedron: a,b on the circle
    // around the opposite pair x,y.
    const Configuration tet = tetrahedron_with_arc_points({});
    const Point3 a = tet[0], b = tet[1], x = tet[2], y = tet[3];
    const DualArcPair pair = make_dual_arc_pair(a, b, x, y, tol);

    SUBCASE("endpoint gives equality for every partner point") {
        for (double t : {0.1, 1.7, 3.9, 5.6}) {
            const Point3 z = pair.circle_ab.point(t);
            CHECK(dual_arc_distance_classify(pair, a, z, tol) == DistanceClass::equal_1);
            CHECK(std::abs(dist(a, z) - 1.0) < 1e-9);
        }
    }
    SUBCASE("both short midpoints exceed 1") {
        const Point3 c = pair.circle_xy.point(pair.short_arc_ab.midpoint());
        const Point3 z = pair.circle_ab.point(pair.short_arc_xy.midpoint());
        CHECK(dual_arc_distance_classify(pair, c, z, tol) == DistanceClass::greater_than_1);
        CHECK(dist(c, z) > 1.0);
    }
    SUBCASE("mixed regions fall below 1") {
        const double long_mid = wrap_angle(pair.short_arc_ab.midpoint() + kPi);
        const Point3 c = pair.circle_xy.point(long_mid);
        const Point3 z = pair.circle_ab.point(pair.short_arc_xy.midpoint());
        CHECK(dual_arc_distance_classify(pair, c, z, tol) == DistanceClass::less_than_1);
        CHECK(dist(c, z) < 1.0);
    }
    SUBCASE("both long regions exceed 1") {
        const Point3 c = pair.circle_xy.point(wrap_angle(pair.short_arc_ab.midpoint() + kPi));
        const Point3 z = pair.circle_ab.point(wrap_angle(pair.short_arc_xy.midpoint() + kPi));
        CHECK(dual_arc_distance_classify(pair, c, z, tol) == DistanceClass::greater_than_1);
    }
}

TEST_CASE("canonical duality") {
    SUBCASE("tetrahedron: opposite edges swap") {
        const FaceComplex fc = build_face_complex(tetrahedron_with_arc_points({}));
        const SelfDuality d = canonical_duality(fc);
        for (const auto& e : fc.edges) {
            const FcEdge& de = fc.edges[d.edge_to_edge[e.id]];
            // Dual endpoints carry the generators and vice versa.
            std::array<int, 2> ep{fc.vertices[e.endpoints[0]].config_label,
                                  fc.vertices[e.endpoints[1]].config_label};
            std::sort(ep.begin(), ep.end());
            CHECK(ep == de.generators);
            CHECK(d.edge_to_edge[de.id] == e.id);
            CHECK(de.id != e.id);
        }
    }
    SUBCASE("suspended pentagon: apex swaps with its facet") {
        const Configuration pent = suspended_polygon(3);
        const FaceComplex fc = build_face_complex(pent);
        const SelfDuality d = canonical_duality(fc);
        int apex_vertex = -1;
        for (const auto& w : fc.vertices)
            if (w.config_label == 5) apex_vertex = w.id;
        REQUIRE(apex_vertex >= 0);
        CHECK(fc.facets[d.vertex_to_facet[apex_vertex]].generator == 5);
        // Apex-incident edges pair with base edges.
        for (const auto& e : fc.edges) {
            const bool at_apex = (e.endpoints[0] == apex_vertex || e.endpoints[1] == apex_vertex);
            const FcEdge& de = fc.edges[d.edge_to_edge[e.id]];
            const bool dual_carried_by_apex = (de.generators[0] == 5 || de.generators[1] == 5);
            CHECK(at_apex == dual_carried_by_apex);
        }
    }
    SUBCASE("non-extremal input is rejected") {
        const FaceComplex fc = build_face_complex(rugby_ball(5, {.reuleaux = true}));
        CHECK_THROWS_AS(canonical_duality(fc), Error);
    }
}

TEST_CASE("barycentric subdivision") {
    SUBCASE("suspended pentagon flag counts") {
        const FaceComplex fc = build_face_complex(suspended_polygon(3));
        const FlagComplex k = barycentric_subdivision(fc);
        CHECK(k.node_count() == 22);
        CHECK(k.two_simplex_count() == 40);
    }
    SUBCASE("fat rugby flag counts") {
        const FaceComplex fc = build_face_complex(rugby_ball(3, {.h = 0.5}));
        const FlagComplex k = barycentric_subdivision(fc);
        CHECK(k.node_count() == 8);
        CHECK(k.two_simplex_count() == 12);
    }
    SUBCASE("edge nodes are equidistant from both endpoints") {
        const FaceComplex fc = build_face_complex(suspended_polygon(3));
        const FlagComplex k = barycentric_subdivision(fc);
        for (const auto& e : fc.edges) {
            const Point3 z = k.node_positions[k.edge_node(e.id)];
            const double da = dist(z, fc.vertices[e.endpoints[0]].position);
            const double db = dist(z, fc.vertices[e.endpoints[1]].position);
            CHECK(da == doctest::Approx(db).epsilon(1e-9));
        }
    }
    SUBCASE("facet nodes lie strictly inside their facet") {
        const FaceComplex fc = build_face_complex(suspended_polygon(4));
        const FlagComplex k = barycentric_subdivision(fc);
        for (const auto& f : fc.facets) {
            const Point3 z = k.node_positions[k.facet_node(f.id)];
            const Point3 y = fc.generator_point(f.generator);
            CHECK(std::abs(dist(z, y) - 1.0) < 1e-9);
            for (std::size_t i = 0; i < fc.config.size(); ++i)
                if (fc.config.labels()[i] != f.generator)
                    CHECK(dist(z, fc.config[i]) < 1.0 - fc.config.tol().eq_dist);
        }
    }
}

TEST_CASE("fixed point freedom") {
    SUBCASE("canonical duality is strongly fixed-point free") {
        for (int k = 2; k <= 4; ++k) {
            const FaceComplex fc = build_face_complex(suspended_polygon(k));
            const SelfDuality d = canonical_duality(fc);
            const auto rep = fixed_point_report(d, barycentric_subdivision(fc));
            CHECK(rep.cell_fixed_point_free);
            CHECK(rep.vertex_disjoint);
        }
    }
}

TEST_CASE("apexed prisms") {
    SUBCASE("structure for n=3") {
        const AbstractComplex c = apexed_prism_complex(3);
        CHECK(c.n_vertices == 7);
        CHECK(c.n_edges() == 12);
        CHECK(c.n_facets() == 7);
        CHECK(c.n_vertices - c.n_edges() + c.n_facets() == 2);
        CHECK(c.vertex_valence(0) == 3); // apex of a 3-pyramid cap
        for (int i = 1; i <= 3; ++i) CHECK(c.vertex_valence(i) == 3);
        for (int i = 4; i <= 6; ++i) CHECK(c.vertex_valence(i) == 4);
    }
    SUBCASE("apex valence equals the base order") {
        for (int n : {4, 5, 6}) CHECK(apexed_prism_complex(n).vertex_valence(0) == n);
    }
    SUBCASE("self-duality census") {
        struct Expect {
            int n, total, fpf;
        };
        for (const auto& ex : {Expect{3, 4, 1}, Expect{4, 4, 0}, Expect{5, 6, 1}}) {
            const auto list = enumerate_self_dualities(apexed_prism_complex(ex.n));
            int fpf = 0;
            for (const auto& d : list)
                if (d.fixed_points.cell_fixed_point_free) ++fpf;
            CHECK(static_cast<int>(list.size()) == ex.total);
            CHECK(fpf == ex.fpf);
            // Non-strong dualities still have no fixed vertex node, only
            // fixed flags; the vertex-disjoint report must agree.
            for (const auto& d : list)
                if (!d.fixed_points.cell_fixed_point_free) CHECK_FALSE(d.fixed_points.vertex_disjoint);
        }
    }
    SUBCASE("bad order") { CHECK_THROWS_AS(apexed_prism_complex(2), Error); }
}

TEST_CASE("complex isomorphism") {
    CHECK(complexes_isomorphic(apexed_prism_complex(3), apexed_prism_complex(3)));
    CHECK_FALSE(complexes_isomorphic(apexed_prism_complex(3), apexed_prism_complex(4)));
    // The suspended pentagon's complex is a pyramid over a 5-gon.
    const FaceComplex fc = build_face_complex(suspended_polygon(3));
    std::vector<std::vector<int>> pyramid_facets;
    pyramid_facets.push_back({0, 1, 2, 3, 4}); // base
    for (int i = 0; i < 5; ++i) pyramid_facets.push_back({5, i, (i + 1) % 5});
    const AbstractComplex pyramid = make_abstract_complex(6, pyramid_facets);
    CHECK(complexes_isomorphic(to_abstract(fc), pyramid));
}
