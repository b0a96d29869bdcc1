#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ballpoly/vazsonyi.hpp"

namespace ballpoly {

// Regular unit tetrahedron {0,1,2,3} plus extra points on the circular
// loci at unit distance from two tetrahedron vertices. counts maps an
// unordered index pair {i,j} (the two vertices the arc passes through) to
// the number of points placed on that arc; all selected arcs must be
// pairwise adjacent (share an index pair member). Result is verified
// extremal.
Configuration tetrahedron_with_arc_points(const std::map<std::pair<int, int>, int>& counts,
                                          Tolerance tol = {});

// Regular (2k-1)-gon of diameter 1 in the z=0 plane (labels 0..2k-2) with
// an apex at unit distance above the center (label 2k-1).
Configuration suspended_polygon(int k, Tolerance tol = {});

// Height that makes all main diagonals of the regular n-gon inscribed in
// the two-sphere intersection circle have length exactly 1 (n odd).
double rugby_reuleaux_height(int n);

struct RugbyOptions {
    bool reuleaux = false;     // tune h so main diagonals are unit length (n odd)
    double h = 0.5;            // pole height when not tuned
    bool include_poles = false; // append the two poles as generators
};

// Regular n-gon inscribed in the circle at distance 1 from the poles
// (0,0,+-h). Polygon labels 0..n-1; with poles included they get labels n
// and n+1.
Configuration rugby_ball(int n, const RugbyOptions& opts = {}, Tolerance tol = {});

struct TwoPoleSpec {
    double h = 0.6;
    std::vector<double> mark_angles;            // >= 2, strictly increasing in [0, 2pi)
    std::vector<std::vector<double>> gap_points; // per gap: parameters in (0,1) along the dual arc
};

struct TwoPoleResult {
    Configuration config; // poles labeled 0 (top) and 1 (bottom), then gap points
    int pole_p_label = 0;
    int pole_q_label = 1;
    std::vector<Point3> marks;        // the circle points between gaps
    std::vector<int> occupied_gaps;   // gaps with at least one placed point
    std::vector<int> isolated_marks;  // marks with both neighboring gaps occupied
    int expected_pair_components = 0; // components of the pole-pair facet intersection
};

// Two poles plus points on the pole-to-pole arcs dual to the gaps between
// consecutive marks on the equatorial circle. Each placed point's ball
// excises the corresponding gap arc from the boundary.
TwoPoleResult two_pole_family(const TwoPoleSpec& spec, Tolerance tol = {});

// Cuts the vertex c off an extremal configuration with a unit ball pushed
// epsilon beyond an interior point of c's facet. The sphere meets each
// edge at c in one point near c; those points plus the ball center replace
// c. Result is re-verified extremal.
Configuration ball_truncate(const Configuration& v, int c_label, double epsilon,
                            const std::optional<Point3>& direction = {});

struct DanglingPlacement {
    int edge_id = -1; // edge of build_face_complex(v)
    double param = 0; // strictly interior position in (0,1) along the arc
};

struct DanglingResult {
    Configuration config;
    struct Change {
        int edge_id;      // split edge (original complex)
        int dual_edge_id; // destroyed dual edge
        int new_label;
        Point3 point;
    };
    std::vector<Change> changes;
};

// Adds interior edge points as dangling vertices. Valid as long as no two
// used edges are dual to each other (a point on an edge removes the
// relative interior of its dual from the boundary). Result re-verified
// extremal.
DanglingResult add_dangling_vertices(const Configuration& v,
                                     const std::vector<DanglingPlacement>& placements);

} // namespace ballpoly
