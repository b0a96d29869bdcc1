#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ballpoly/duality.hpp"
#include "ballpoly/vazsonyi.hpp"

namespace ballpoly {

// Point-set document: {"points": [[x,y,z], ...], "tolerance": {...}}.
// Doubles survive a write/read cycle exactly. Path "-" means stdin/stdout.
Configuration read_configuration(const std::string& path);
Configuration parse_configuration(std::istream& in);
std::string configuration_to_json(const Configuration& v);
void write_configuration(const Configuration& v, const std::string& path);

struct RunReport {
    std::string input;
    std::optional<int> v_count, e_count, f_count, euler;
    std::optional<ExtremalityVerdict> verdict;
    bool duality_found = false;
    bool duality_fixed_point_free = false;
    bool duality_vertex_disjoint = false;
    std::vector<std::string> warnings;
};

// Deterministic serialization: stable key order, floats at 12 significant
// digits.
std::string report_to_json(const RunReport& report);

// Watertight OFF/OBJ tessellation: every facet fans from its interior
// realization point over its boundary arcs, subdivided at most arc_step
// degrees apart. Both facets of an edge reuse one polyline, so shared
// boundary vertices are shared mesh indices.
void export_mesh(const FaceComplex& fc, const std::string& path, double arc_step_deg = 5.0);

void export_dot(const DiameterGraph& g, const std::string& path);
void export_dot_skeleton(const FaceComplex& fc, const std::string& path);

// In-memory emitters used by the file writers and the tests.
std::string mesh_to_off(const FaceComplex& fc, double arc_step_deg = 5.0);
std::string mesh_to_obj(const FaceComplex& fc, double arc_step_deg = 5.0);
std::string dot_from_diameter_graph(const DiameterGraph& g);
std::string dot_from_skeleton(const FaceComplex& fc);

} // namespace ballpoly
