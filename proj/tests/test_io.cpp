#include <doctest.h>

#include <map>
#include <sstream>

#include "ballpoly/generators.hpp"
#include "ballpoly/io.hpp"

using namespace ballpoly;

namespace {

// Closed orientable surface: every directed edge appears exactly once.
bool mesh_is_watertight(const std::string& off, int* vertex_count = nullptr, double* area = nullptr) {
    std::istringstream in(off);
    std::string magic;
    in >> magic;
    if (magic != "OFF") return false;
    int nv = 0, nf = 0, ne = 0;
    in >> nv >> nf >> ne;
    std::vector<Point3> verts(nv);
    for (auto& p : verts) in >> p.x >> p.y >> p.z;
    std::map<std::pair<int, int>, int> directed;
    double total_area = 0;
    for (int f = 0; f < nf; ++f) {
        int k, a, b, c;
        in >> k >> a >> b >> c;
        if (k != 3) return false;
        ++directed[{a, b}];
        ++directed[{b, c}];
        ++directed[{c, a}];
        total_area += 0.5 * cross(verts[b] - verts[a], verts[c] - verts[a]).norm();
    }
    for (const auto& [edge, count] : directed) {
        if (count != 1) return false;
        if (!directed.count({edge.second, edge.first})) return false;
    }
    if (vertex_count) *vertex_count = nv;
    if (area) *area = total_area;
    return true;
}

} // namespace

TEST_CASE("configuration round trip") {
    const Configuration v = suspended_polygon(3);
    const std::string text = configuration_to_json(v);
    std::istringstream in(text);
    const Configuration w = parse_configuration(in);
    REQUIRE(w.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].x == w[i].x);
        CHECK(v[i].y == w[i].y);
        CHECK(v[i].z == w[i].z);
    }
    CHECK(configuration_to_json(w) == text);
}

TEST_CASE("configuration parsing errors") {
    SUBCASE("NaN is rejected") {
        std::istringstream in("{\"points\": [[0,0,0],[null,1,2]]}");
        CHECK_THROWS_AS(parse_configuration(in), Error);
    }
    SUBCASE("empty point list") {
        std::istringstream in("{\"points\": []}");
        CHECK_THROWS_AS(parse_configuration(in), Error);
    }
    SUBCASE("duplicates within the band") {
        std::istringstream in("{\"points\": [[0,0,0],[0,0,1e-12]]}");
        CHECK_THROWS_AS(parse_configuration(in), Error);
    }
    SUBCASE("tolerance override is honored") {
        std::istringstream in(
            "{\"points\": [[0,0,0],[1,0,0]], \"tolerance\": {\"eq_dist\": 1e-7}}");
        const Configuration v = parse_configuration(in);
        CHECK(v.tol().eq_dist == doctest::Approx(1e-7));
    }
}

TEST_CASE("report serialization is stable") {
    RunReport rep;
    rep.input = "test";
    rep.v_count = 6;
    rep.e_count = 10;
    rep.f_count = 6;
    rep.euler = 2;
    const std::string a = report_to_json(rep);
    const std::string b = report_to_json(rep);
    CHECK(a == b);
    CHECK(a.find("\"input\"") < a.find("\"faces\""));
}

TEST_CASE("mesh export") {
    SUBCASE("fat rugby closes up") {
        const FaceComplex fc = build_face_complex(rugby_ball(3, {.h = 0.5}));
        CHECK(mesh_is_watertight(mesh_to_off(fc)));
    }
    SUBCASE("tetrahedron body closes up and refines") {
        const FaceComplex fc = build_face_complex(tetrahedron_with_arc_points({}));
        int nv_coarse = 0, nv_fine = 0;
        double area_coarse = 0, area_fine = 0;
        CHECK(mesh_is_watertight(mesh_to_off(fc, 2.0), &nv_coarse, &area_coarse));
        CHECK(mesh_is_watertight(mesh_to_off(fc, 1.0), &nv_fine, &area_fine));
        CHECK(nv_fine > nv_coarse * 3 / 2); // boundary sampling roughly doubles
        CHECK(std::abs(area_fine - area_coarse) / area_coarse < 1e-3);
    }
    SUBCASE("obj emitter agrees on the vertex count") {
        const FaceComplex fc = build_face_complex(rugby_ball(3, {.h = 0.5}));
        const std::string obj = mesh_to_obj(fc);
        CHECK(obj.find("v ") == 0);
        CHECK(obj.find("f ") != std::string::npos);
    }
}

TEST_CASE("dot export") {
    SUBCASE("tetrahedron diameter graph is K4") {
        const std::string dot = dot_from_diameter_graph(diameter_graph(tetrahedron_with_arc_points({})));
        int count = 0;
        for (std::size_t pos = 0; (pos = dot.find("--", pos)) != std::string::npos; ++pos) ++count;
        CHECK(count == 6);
    }
    SUBCASE("fat rugby skeleton has two nodes and a triple edge") {
        const std::string dot = dot_from_skeleton(build_face_complex(rugby_ball(3, {.h = 0.5})));
        int count = 0;
        for (std::size_t pos = 0; (pos = dot.find("v0 -- v1", pos)) != std::string::npos; ++pos)
            ++count;
        CHECK(count == 3);
    }
    SUBCASE("suspended pentagon skeleton has 10 edges") {
        const std::string dot = dot_from_skeleton(build_face_complex(suspended_polygon(3)));
        int count = 0;
        for (std::size_t pos = 0; (pos = dot.find("--", pos)) != std::string::npos; ++pos) ++count;
        CHECK(count == 10);
    }
}
