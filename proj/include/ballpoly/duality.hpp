#pragma once

#include <optional>
#include <vector>

#include "ballpoly/face_complex.hpp"

namespace ballpoly {

// Four points with all four cross distances equal to 1. The short arc
// between a and b on the circle through them (around the x-y axis) and the
// short arc between x and y on the circle through x,y are dual to each
// other: distances between the two circles flip around 1 depending on
// which side of its short arc each point lies.
struct DualArcPair {
    Point3 a, b, x, y;
    Circle3 circle_xy; // carries a and b
    Circle3 circle_ab; // carries x and y
    AngularInterval short_arc_ab; // on circle_xy
    AngularInterval short_arc_xy; // on circle_ab
};

DualArcPair make_dual_arc_pair(const Point3& a, const Point3& b, const Point3& x, const Point3& y,
                               const Tolerance& tol = {});

enum class DistanceClass { greater_than_1, less_than_1, equal_1 };

// Classifies |c - z| for c on circle_xy and z on circle_ab analytically
// from the arc regions, then asserts the direct distance agrees.
DistanceClass dual_arc_distance_classify(const DualArcPair& pair, const Point3& c, const Point3& z,
                                         const Tolerance& tol = {});

// Order-reversing involution of a face complex: vertices swap with facets,
// edges swap with edges.
struct SelfDuality {
    std::vector<int> vertex_to_facet;
    std::vector<int> facet_to_vertex;
    std::vector<int> edge_to_edge;
};

// The canonical self-duality of the complex of an extremal configuration:
// each vertex x maps to the facet of generator x, and an edge with
// endpoints {a,b} carried by generators {x,y} maps to the unique edge with
// endpoints {x,y} carried by {a,b}. Verified to be an involution and
// order-reversing before returning.
SelfDuality canonical_duality(const FaceComplex& fc);

// Abstract two-dimensional cell complex: facets given as cyclic vertex
// circuits, edges derived with their two incident facets.
struct AbstractComplex {
    int n_vertices = 0;
    std::vector<std::vector<int>> facet_vertices; // cyclic circuits
    struct AEdge {
        std::array<int, 2> verts;  // sorted
        std::array<int, 2> facets; // sorted
    };
    std::vector<AEdge> edges;

    int n_facets() const { return static_cast<int>(facet_vertices.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }
    bool vertex_on_facet(int v, int f) const;
    int vertex_valence(int v) const;
};

AbstractComplex make_abstract_complex(int n_vertices, std::vector<std::vector<int>> facet_circuits);
AbstractComplex to_abstract(const FaceComplex& fc);

// Prism over an n-gon with a pyramid glued onto one base: n + 1 + n facets
// (base n-gon, n side quadrilaterals, n apex triangles).
AbstractComplex apexed_prism_complex(int n);

// Barycentric subdivision: one node per nonempty face, one simplex per
// chain of faces. Geometric complexes get curvilinear realization
// coordinates (vertex itself, arc midpoint, interior point of the facet).
struct FlagComplex {
    int n_vertices = 0, n_edges = 0, n_facets = 0;
    std::vector<Point3> node_positions;         // empty in the abstract case
    std::vector<std::vector<int>> simplices;    // node id lists, sizes 1..3

    int node_count() const { return n_vertices + n_edges + n_facets; }
    int vertex_node(int v) const { return v; }
    int edge_node(int e) const { return n_vertices + e; }
    int facet_node(int f) const { return n_vertices + n_edges + f; }
    std::size_t two_simplex_count() const;
};

FlagComplex barycentric_subdivision(const FaceComplex& fc);
FlagComplex abstract_flag_complex(const AbstractComplex& c);

struct FixedPointReport {
    bool cell_fixed_point_free = false;   // no nonempty simplex maps to itself
    bool vertex_disjoint = false;         // stronger: C and its image never share a node
};

FixedPointReport fixed_point_report(const SelfDuality& d, const FlagComplex& k);
bool is_fixed_point_free(const SelfDuality& d, const FlagComplex& k);

// Exhaustive enumeration of involutory self-dualities of a small abstract
// complex, by backtracking over vertex-facet pairings with incidence
// antisymmetry pruning, extended to edges.
struct ClassifiedDuality {
    SelfDuality duality;
    FixedPointReport fixed_points;
};
std::vector<ClassifiedDuality> enumerate_self_dualities(const AbstractComplex& c);

// Order-preserving isomorphism test between two abstract complexes
// (facets must be determined by their vertex sets).
bool complexes_isomorphic(const AbstractComplex& a, const AbstractComplex& b);

} // namespace ballpoly
