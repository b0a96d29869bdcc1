#include "ballpoly/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ballpoly {

using ordered_json = nlohmann::ordered_json;

namespace {

double sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot open " + path + " for writing");
    out << text;
    if (!out) fail(Errc::IoError, "write failed for " + path);
}

} // namespace

Configuration parse_configuration(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        fail(Errc::ParseError, "expected an object with a \"points\" array");
    std::vector<Point3> pts;
    for (const auto& row : doc["points"]) {
        if (!row.is_array() || row.size() != 3)
            fail(Errc::ParseError, "each point must be a 3-element array");
        Point3 p;
        double* coords[3] = {&p.x, &p.y, &p.z};
        for (int i = 0; i < 3; ++i) {
            if (!row[i].is_number()) fail(Errc::ParseError, "coordinates must be numbers");
            *coords[i] = row[i].get<double>();
        }
        if (!p.finite()) fail(Errc::ParseError, "coordinates must be finite");
        pts.push_back(p);
    }
    if (pts.empty()) fail(Errc::EmptyInput, "point list is empty");
    Tolerance tol;
    if (doc.contains("tolerance")) {
        const auto& t = doc["tolerance"];
        if (!t.is_object()) fail(Errc::ParseError, "\"tolerance\" must be an object");
        if (t.contains("eq_dist")) tol.eq_dist = t["eq_dist"].get<double>();
        if (t.contains("vertex_merge")) tol.vertex_merge = t["vertex_merge"].get<double>();
        if (t.contains("angle_eps")) tol.angle_eps = t["angle_eps"].get<double>();
        // A raised equality band widens the merge radius unless the file
        // pinned one explicitly.
        if (!t.contains("vertex_merge"))
            tol.vertex_merge = std::max(tol.vertex_merge, 100 * tol.eq_dist);
        tol.validate();
    }
    return Configuration(std::move(pts), tol);
}

Configuration read_configuration(const std::string& path) {
    if (path == "-") return parse_configuration(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    return parse_configuration(in);
}

std::string configuration_to_json(const Configuration& v) {
    ordered_json doc;
    doc["points"] = ordered_json::array();
    for (const auto& p : v.points()) doc["points"].push_back({p.x, p.y, p.z});
    const Tolerance def;
    const Tolerance& t = v.tol();
    if (t.eq_dist != def.eq_dist || t.vertex_merge != def.vertex_merge ||
        t.angle_eps != def.angle_eps) {
        doc["tolerance"] = {
            {"eq_dist", t.eq_dist}, {"vertex_merge", t.vertex_merge}, {"angle_eps", t.angle_eps}};
    }
    return doc.dump(2) + "\n";
}

void write_configuration(const Configuration& v, const std::string& path) {
    write_text(path, configuration_to_json(v));
}

std::string report_to_json(const RunReport& report) {
    ordered_json doc;
    doc["input"] = report.input;
    if (report.v_count) {
        doc["faces"] = {{"v", *report.v_count},
                        {"e", *report.e_count},
                        {"f", *report.f_count},
                        {"euler", *report.euler}};
    }
    if (report.verdict) {
        const auto& w = *report.verdict;
        ordered_json j;
        j["n"] = w.n;
        j["e_count"] = w.e_count;
        j["bound"] = w.bound;
        j["is_extremal"] = w.is_extremal;
        j["is_critical"] = w.is_critical;
        j["ghs_cross_check"] = w.ghs_cross_check;
        j["scale_factor"] = sig12(w.scale_factor);
        j["spectral_gap"] = sig12(w.spectral_gap);
        ordered_json vals = ordered_json::object();
        for (const auto& [label, val] : w.valences) vals[std::to_string(label)] = val;
        j["valences"] = vals;
        doc["extremality"] = j;
    }
    doc["duality"] = {{"canonical_found", report.duality_found},
                      {"fixed_point_free", report.duality_fixed_point_free},
                      {"vertex_disjoint", report.duality_vertex_disjoint}};
    doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Mesh export
// ---------------------------------------------------------------------------

namespace {

struct MeshBuilder {
    std::map<std::array<double, 3>, int> index;
    std::vector<Point3> verts;
    std::vector<std::array<int, 3>> tris;

    int add(const Point3& p) {
        const std::array<double, 3> key{p.x, p.y, p.z};
        const auto it = index.find(key);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(verts.size());
        index.emplace(key, id);
        verts.push_back(p);
        return id;
    }
};

// Sample points along an edge arc, endpoints pinned to the complex vertex
// positions so adjacent edges share coordinates exactly.
std::vector<Point3> edge_polyline(const FaceComplex& fc, const FcEdge& e, double step_rad) {
    const double len = e.interval.length();
    const int segments = std::max(1, static_cast<int>(std::ceil(len / step_rad)));
    std::vector<Point3> pts;
    pts.push_back(fc.vertices[e.endpoints[0]].position);
    for (int i = 1; i < segments; ++i)
        pts.push_back(e.circle.point(wrap_angle(e.interval.start + len * i / segments)));
    pts.push_back(fc.vertices[e.endpoints[1]].position);
    return pts;
}

MeshBuilder tessellate(const FaceComplex& fc, double arc_step_deg) {
    if (!(arc_step_deg > 0)) fail(Errc::InvalidSpec, "arc step must be positive");
    const double step_rad = arc_step_deg * kPi / 180.0;
    const FlagComplex flags = barycentric_subdivision(fc);

    std::vector<std::vector<Point3>> polylines;
    polylines.reserve(fc.edges.size());
    for (const auto& e : fc.edges) polylines.push_back(edge_polyline(fc, e, step_rad));

    MeshBuilder mb;
    for (const auto& f : fc.facets) {
        const int apex = mb.add(flags.node_positions[flags.facet_node(f.id)]);
        const std::size_t k = f.boundary_edges.size();
        for (std::size_t s = 0; s < k; ++s) {
            const FcEdge& e = fc.edges[f.boundary_edges[s]];
            std::vector<Point3> poly = polylines[f.boundary_edges[s]];
            if (e.endpoints[0] != f.boundary_vertices[s]) std::reverse(poly.begin(), poly.end());
            for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
                const int a = mb.add(poly[i]);
                const int b = mb.add(poly[i + 1]);
                if (a != b && a != apex && b != apex) mb.tris.push_back({apex, a, b});
            }
        }
    }
    return mb;
}

std::string format_point(const Point3& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g", p.x, p.y, p.z);
    return buf;
}

} // namespace

std::string mesh_to_off(const FaceComplex& fc, double arc_step_deg) {
    const MeshBuilder mb = tessellate(fc, arc_step_deg);
    std::ostringstream out;
    out << "OFF\n" << mb.verts.size() << ' ' << mb.tris.size() << " 0\n";
    for (const auto& p : mb.verts) out << format_point(p) << '\n';
    for (const auto& t : mb.tris) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

std::string mesh_to_obj(const FaceComplex& fc, double arc_step_deg) {
    const MeshBuilder mb = tessellate(fc, arc_step_deg);
    std::ostringstream out;
    for (const auto& p : mb.verts) out << "v " << format_point(p) << '\n';
    for (const auto& t : mb.tris)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    return out.str();
}

void export_mesh(const FaceComplex& fc, const std::string& path, double arc_step_deg) {
    const bool obj = path.size() > 4 && path.substr(path.size() - 4) == ".obj";
    write_text(path, obj ? mesh_to_obj(fc, arc_step_deg) : mesh_to_off(fc, arc_step_deg));
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

std::string dot_from_diameter_graph(const DiameterGraph& g) {
    std::ostringstream out;
    out << "graph diameter {\n";
    for (int l : g.labels) out << "  " << l << ";\n";
    for (const auto& e : g.edges) out << "  " << e[0] << " -- " << e[1] << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_from_skeleton(const FaceComplex& fc) {
    std::ostringstream out;
    out << "graph skeleton {\n";
    for (const auto& w : fc.vertices) {
        out << "  v" << w.id << " [label=\""
            << (w.config_label >= 0 ? "p" + std::to_string(w.config_label)
                                    : "v" + std::to_string(w.id))
            << (w.principal ? "" : " (dangling)") << "\"];\n";
    }
    std::vector<std::array<int, 2>> edges;
    for (const auto& e : fc.edges)
        edges.push_back({std::min(e.endpoints[0], e.endpoints[1]),
                         std::max(e.endpoints[0], e.endpoints[1])});
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) out << "  v" << e[0] << " -- v" << e[1] << ";\n";
    out << "}\n";
    return out.str();
}

void export_dot(const DiameterGraph& g, const std::string& path) {
    write_text(path, dot_from_diameter_graph(g));
}

void export_dot_skeleton(const FaceComplex& fc, const std::string& path) {
    write_text(path, dot_from_skeleton(fc));
}

} // namespace ballpoly
