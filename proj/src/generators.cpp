#include "ballpoly/generators.hpp"

#include <algorithm>
#include <set>

#include "ballpoly/duality.hpp"

namespace ballpoly {

namespace {

// Point at parameter t in [0,1] along the arc from angle `from` to angle
// `to` on the circle, taking the short way when `take_short`, else the
// long way.
double arc_angle_at(double from, double to, double t, bool take_short) {
    const double ccw = wrap_angle(to - from);
    const bool ccw_is_short = ccw <= kPi;
    if (take_short == ccw_is_short) return wrap_angle(from + t * ccw);
    return wrap_angle(from - t * (kTwoPi - ccw));
}

std::vector<Point3> unit_tetrahedron() {
    const double s = 1.0 / std::sqrt(8.0);
    return {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
}

} // namespace

Configuration tetrahedron_with_arc_points(const std::map<std::pair<int, int>, int>& counts,
                                          Tolerance tol) {
    const std::vector<Point3> tet = unit_tetrahedron();
    std::vector<std::pair<int, int>> selected;
    for (const auto& [arc, count] : counts) {
        auto [i, j] = arc;
        if (i > j) std::swap(i, j);
        if (i < 0 || j > 3 || i == j) fail(Errc::InvalidArcSelection, "arc indices must be in 0..3");
        if (count < 0) fail(Errc::InvalidArcSelection, "negative point count");
        if (count > 0) selected.push_back({i, j});
    }
    for (std::size_t a = 0; a < selected.size(); ++a)
        for (std::size_t b = a + 1; b < selected.size(); ++b) {
            const auto& [i, j] = selected[a];
            const auto& [k, l] = selected[b];
            if (i != k && i != l && j != k && j != l)
                fail(Errc::InvalidArcSelection,
                     "opposite arcs selected; their points would exceed unit distance");
        }

    std::vector<Point3> pts = tet;
    for (const auto& [arc, count] : counts) {
        if (count == 0) continue;
        auto [i, j] = arc;
        if (i > j) std::swap(i, j);
        // The arc through vertices i and j lies on the circle of the
        // complementary pair.
        int k = -1, l = -1;
        for (int m = 0; m < 4; ++m) {
            if (m == i || m == j) continue;
            (k < 0 ? k : l) = m;
        }
        const Circle3 c = intersection_circle(tet[k], tet[l], tol);
        const double ti = c.angle_of(tet[i]);
        const double tj = c.angle_of(tet[j]);
        for (int m = 0; m < count; ++m) {
            const double t =
                std::clamp(double(m + 1) / double(count + 1), 0.05, 0.95);
            pts.push_back(c.point(arc_angle_at(ti, tj, t, /*take_short=*/true)));
        }
    }
    Configuration v(std::move(pts), tol);
    if (!check_extremal(v).is_extremal)
        fail(Errc::InternalInvariantViolation, "tetrahedron arc construction not extremal");
    return v;
}

Configuration suspended_polygon(int k, Tolerance tol) {
    if (k < 2) fail(Errc::InvalidSpec, "suspension needs k >= 2");
    const int m = 2 * k - 1;
    // Main diagonals (between vertices floor(m/2) apart) have length
    // 2 R cos(pi/(2m)); unit diagonals give this circumradius.
    const double r = 1.0 / (2.0 * std::cos(kPi / (2.0 * m)));
    std::vector<Point3> pts;
    for (int i = 0; i < m; ++i) {
        const double a = kTwoPi * i / m;
        pts.push_back({r * std::cos(a), r * std::sin(a), 0.0});
    }
    pts.push_back({0.0, 0.0, std::sqrt(1.0 - r * r)});
    return Configuration(std::move(pts), tol);
}

double rugby_reuleaux_height(int n) {
    if (n < 3 || n % 2 == 0) fail(Errc::InvalidParity, "diagonal tuning needs odd n >= 3");
    const double c = std::cos(kPi / (2.0 * n));
    return std::sqrt(1.0 - 1.0 / (4.0 * c * c));
}

Configuration rugby_ball(int n, const RugbyOptions& opts, Tolerance tol) {
    if (n < 3) fail(Errc::InvalidSpec, "polygon needs n >= 3");
    const double h = opts.reuleaux ? rugby_reuleaux_height(n) : opts.h;
    if (!(h > 0 && h < 1)) fail(Errc::InvalidSpec, "pole height must be in (0, 1)");
    const double r = std::sqrt(1.0 - h * h);
    std::vector<Point3> pts;
    for (int i = 0; i < n; ++i) {
        const double a = kTwoPi * i / n;
        pts.push_back({r * std::cos(a), r * std::sin(a), 0.0});
    }
    if (opts.include_poles) {
        pts.push_back({0, 0, h});
        pts.push_back({0, 0, -h});
    }
    return Configuration(std::move(pts), tol);
}

TwoPoleResult two_pole_family(const TwoPoleSpec& spec, Tolerance tol) {
    if (!(spec.h > 0 && spec.h < 1)) fail(Errc::InvalidSpec, "pole height must be in (0, 1)");
    const std::size_t n = spec.mark_angles.size();
    if (n < 2) fail(Errc::InvalidSpec, "need at least 2 marks on the circle");
    if (spec.gap_points.size() != n)
        fail(Errc::InvalidSpec, "need one (possibly empty) point list per gap");
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.mark_angles[i] < 0 || spec.mark_angles[i] >= kTwoPi)
            fail(Errc::InvalidSpec, "mark angles must lie in [0, 2pi)");
        if (i && spec.mark_angles[i] <= spec.mark_angles[i - 1])
            fail(Errc::InvalidSpec, "mark angles must be strictly increasing");
    }

    const Point3 p{0, 0, spec.h}, q{0, 0, -spec.h};
    const Circle3 equator = intersection_circle(p, q, tol);

    TwoPoleResult res;
    std::vector<Point3> pts = {p, q};
    int long_gaps = 0;
    for (std::size_t i = 0; i < n; ++i) res.marks.push_back(equator.point(spec.mark_angles[i]));

    for (std::size_t i = 0; i < n; ++i) {
        const double gap_len =
            wrap_angle(spec.mark_angles[(i + 1) % n] - spec.mark_angles[i]);
        const bool gap_short = gap_len < kPi - tol.angle_eps;
        if (std::abs(gap_len - kPi) <= tol.angle_eps)
            fail(Errc::InvalidSpec, "semicircular gap is ambiguous");
        if (!gap_short && ++long_gaps > 1)
            fail(Errc::InvalidSpec, "at most one gap may exceed a semicircle");
        if (spec.gap_points[i].empty()) continue;
        res.occupied_gaps.push_back(static_cast<int>(i));

        // Points on the arc between the poles dual to this gap: the short
        // pole-to-pole arc for a short gap, the long one otherwise.
        const Circle3 carrier =
            intersection_circle(res.marks[i], res.marks[(i + 1) % n], tol);
        const double tp = carrier.angle_of(p);
        const double tq = carrier.angle_of(q);
        for (double t : spec.gap_points[i]) {
            if (!(t > 0 && t < 1)) fail(Errc::InvalidSpec, "gap parameters must lie in (0,1)");
            pts.push_back(carrier.point(arc_angle_at(tp, tq, t, gap_short)));
        }
    }
    if (pts.size() < 3) fail(Errc::InvalidSpec, "no gap points; the body is a plain lens");

    for (std::size_t i = 0; i < n; ++i) {
        const bool prev = !spec.gap_points[(i + n - 1) % n].empty();
        const bool cur = !spec.gap_points[i].empty();
        if (prev && cur) res.isolated_marks.push_back(static_cast<int>(i));
    }
    // Components of the pole-pair intersection: one arc per maximal run of
    // unoccupied gaps plus the isolated marks.
    int runs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool cur = spec.gap_points[i].empty();
        const bool prev = spec.gap_points[(i + n - 1) % n].empty();
        if (cur && !prev) ++runs;
    }
    res.expected_pair_components = runs + static_cast<int>(res.isolated_marks.size());
    res.config = Configuration(std::move(pts), tol);
    return res;
}

// ---------------------------------------------------------------------------
// Ball truncation
// ---------------------------------------------------------------------------

Configuration ball_truncate(const Configuration& v, int c_label, double epsilon,
                            const std::optional<Point3>& direction) {
    if (!(epsilon > 0 && epsilon <= 0.1))
        fail(Errc::InvalidSpec, "epsilon must lie in (0, 0.1]");
    const FaceComplex fc = build_face_complex(v);
    int c_vertex = -1;
    for (const auto& w : fc.vertices)
        if (w.config_label == c_label) c_vertex = w.id;
    if (c_vertex < 0) fail(Errc::InvalidSpec, "label is not a vertex of the body");
    const Point3 c = fc.generator_point(c_label);

    Point3 pc;
    if (direction) {
        pc = *direction;
        if (std::abs(dist(pc, c) - 1.0) > 1e-6)
            fail(Errc::InvalidSpec, "direction point must lie on the unit sphere around c");
    } else {
        // Spherical barycenter of the facet's vertices.
        const FcFacet& f = fc.facets[fc.facet_of_generator(c_label)];
        std::set<int> distinct(f.boundary_vertices.begin(), f.boundary_vertices.end());
        Vec3 sum{0, 0, 0};
        for (int vid : distinct) sum += fc.vertices[vid].position - c;
        if (sum.norm() < 1e-9) fail(Errc::InternalInvariantViolation, "degenerate facet barycenter");
        pc = c + normalized(sum);
    }
    const Point3 pc_out = pc + (pc - c) * epsilon;

    std::vector<Point3> pts = {pc_out};
    for (const auto& e : fc.edges) {
        int c_end = -1;
        if (e.endpoints[0] == c_vertex) c_end = 0;
        if (e.endpoints[1] == c_vertex) c_end = 1;
        if (c_end < 0) continue;
        // Bisection for |edge(theta) - pc_out| = 1 along the arc from c.
        const double len = e.interval.length();
        const auto at = [&](double off) {
            const double theta = c_end == 0 ? e.interval.start + off : e.interval.start + len - off;
            return e.circle.point(wrap_angle(theta));
        };
        double lo = 0.0, hi = len;
        double flo = dist(at(lo), pc_out) - 1.0;
        const double fhi = dist(at(hi), pc_out) - 1.0;
        if (!(flo > 0) || !(fhi < 0))
            fail(Errc::TruncationTooCoarse, "truncation sphere does not cross an incident edge");
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = dist(at(mid), pc_out) - 1.0;
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        pts.push_back(at(0.5 * (lo + hi)));
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.labels()[i] != c_label) pts.push_back(v[i]);

    Configuration result(std::move(pts), v.tol());
    const auto verdict = check_extremal(result);
    if (!verdict.is_extremal)
        fail(Errc::TruncationTooCoarse, "truncated configuration is not extremal; reduce epsilon");
    return result;
}

// ---------------------------------------------------------------------------
// Dangling vertices
// ---------------------------------------------------------------------------

DanglingResult add_dangling_vertices(const Configuration& v,
                                     const std::vector<DanglingPlacement>& placements) {
    const FaceComplex fc = build_face_complex(v);
    const SelfDuality dual = canonical_duality(fc);

    std::set<int> used;
    for (const auto& pl : placements) {
        if (pl.edge_id < 0 || pl.edge_id >= fc.e_count())
            fail(Errc::InvalidSpec, "placement on unknown edge");
        if (!(pl.param > 0 && pl.param < 1))
            fail(Errc::InvalidSpec, "placement parameter must be strictly interior");
        used.insert(pl.edge_id);
    }
    for (int e : used)
        if (used.count(dual.edge_to_edge[e]))
            fail(Errc::DualEdgeConflict,
                 "placements on an edge and its dual would destroy the dual edge");

    DanglingResult res;
    std::vector<Point3> pts = v.points();
    std::vector<int> labels = v.labels();
    int next_label = *std::max_element(labels.begin(), labels.end()) + 1;
    for (const auto& pl : placements) {
        const FcEdge& e = fc.edges[pl.edge_id];
        const Point3 u = e.circle.point(wrap_angle(e.interval.start + pl.param * e.interval.length()));
        pts.push_back(u);
        labels.push_back(next_label);
        res.changes.push_back({pl.edge_id, dual.edge_to_edge[pl.edge_id], next_label, u});
        ++next_label;
    }
    res.config = Configuration(std::move(pts), std::move(labels), v.tol());
    if (!check_extremal(res.config).is_extremal)
        fail(Errc::InternalInvariantViolation, "dangling additions broke extremality");
    return res;
}

} // namespace ballpoly
