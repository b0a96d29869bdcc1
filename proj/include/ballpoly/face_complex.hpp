#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ballpoly/ball_hull.hpp"

namespace ballpoly {

// A vertex of the boundary complex. Principal vertices lie on three or more
// facets; dangling vertices are generator points lying on exactly two
// facets, in the relative interior of a boundary arc.
struct FcVertex {
    int id = -1;
    Point3 position;
    bool principal = true;
    std::vector<int> incident_generators; // labels at unit distance, sorted
    int config_label = -1;                // matching generator point, or -1
};

// A boundary arc: one piece of a connectivity component of the intersection
// of two facets, split at the dangling vertices in its interior.
struct FcEdge {
    int id = -1;
    Circle3 circle;
    std::array<int, 2> generators; // labels {p, q}, sorted
    AngularInterval interval;
    std::array<int, 2> endpoints; // vertex ids at interval start / end
    bool is_short = false;        // arc length < pi
};

// One facet per generator. The boundary circuit alternates vertices and
// edges: edge i runs from vertex i to vertex i+1 (cyclically).
struct FcFacet {
    int id = -1;
    int generator = -1;
    std::vector<int> boundary_vertices;
    std::vector<int> boundary_edges;
    bool is_digonal = false;
    Vec3 cap_axis; // unit direction from the generator toward the facet
};

struct FaceComplex {
    Configuration config;
    std::vector<FcVertex> vertices;
    std::vector<FcEdge> edges;
    std::vector<FcFacet> facets;

    int v_count() const { return static_cast<int>(vertices.size()); }
    int e_count() const { return static_cast<int>(edges.size()); }
    int f_count() const { return static_cast<int>(facets.size()); }

    int facet_of_generator(int label) const;
    // Position of a generator point by label.
    const Point3& generator_point(int label) const;
};

// The intersection of the two facets of p and q, as an angular set on their
// common circle: the intersection over all other generators of the ball
// arcs they cut. Never the full circle for a tight set of >= 3 points; has
// at most #V - 2 components.
AngularIntervalSet facet_components(int p_label, int q_label, const Configuration& v);

// Builds the full boundary complex: per-pair components, vertex candidate
// clustering, dangling-vertex insertion and arc splitting, facet boundary
// circuits, and the structural checks (Euler relation, incidences).
FaceComplex build_face_complex(const Configuration& v);

int euler_characteristic(const FaceComplex& fc);

// 2-connectivity of the 1-skeleton as a multigraph (parallel arcs count).
bool is_two_connected(const FaceComplex& fc);
bool is_two_connected_graph(int n_vertices, const std::vector<std::array<int, 2>>& edges);

// Re-derives shortness and cross-validates against the plane criterion:
// for facets with >= 3 vertices, a short edge and the opposite generator
// lie on different sides of the plane through the carrying generator and
// the edge endpoints.
bool edge_is_short(const FaceComplex& fc, int edge_id);

struct ValenceEntry {
    int vertex_id;
    int skeleton_valence;
    int generator_count;
    bool ok;
};
std::vector<ValenceEntry> vertex_valence_check(const FaceComplex& fc);

} // namespace ballpoly
