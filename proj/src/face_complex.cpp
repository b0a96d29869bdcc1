#include "ballpoly/face_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ballpoly {

int FaceComplex::facet_of_generator(int label) const {
    for (const auto& f : facets)
        if (f.generator == label) return f.id;
    fail(Errc::InternalInvariantViolation, "no facet for generator " + std::to_string(label));
}

const Point3& FaceComplex::generator_point(int label) const {
    for (std::size_t i = 0; i < config.size(); ++i)
        if (config.labels()[i] == label) return config[i];
    fail(Errc::InternalInvariantViolation, "unknown generator label " + std::to_string(label));
}

// ---------------------------------------------------------------------------
// Facet pair components
// ---------------------------------------------------------------------------

namespace {

struct PairData {
    std::size_t i, j; // indices into config
    Circle3 circle;
    AngularIntervalSet comps;
};

AngularIntervalSet components_on(const Circle3& circle, const Configuration& v, std::size_t i,
                                 std::size_t j) {
    AngularIntervalSet acc = AngularIntervalSet::full();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k == i || k == j) continue;
        acc = interval_set_intersect(acc, ball_arc_on_circle(circle, v[k], v.tol()), v.tol().angle_eps);
        if (acc.is_empty()) break;
    }
    if (v.size() >= 3 && acc.full_circle)
        fail(Errc::InternalInvariantViolation,
             "facet intersection covers a whole circle; input not tight or tolerance failure");
    if (acc.intervals.size() > v.size() - 2)
        fail(Errc::InternalInvariantViolation, "more components than generators allow");
    return acc;
}

} // namespace

AngularIntervalSet facet_components(int p_label, int q_label, const Configuration& v) {
    if (p_label == q_label) fail(Errc::InvalidSpec, "facet pair needs distinct generators");
    std::size_t pi = v.size(), qi = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.labels()[i] == p_label) pi = i;
        if (v.labels()[i] == q_label) qi = i;
    }
    if (pi == v.size() || qi == v.size()) fail(Errc::InvalidSpec, "unknown generator label");
    const Circle3 circle = intersection_circle(v[pi], v[qi], v.tol());
    return components_on(circle, v, pi, qi);
}

// ---------------------------------------------------------------------------
// Complex construction
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
    Point3 pos;
    std::size_t pair_idx;
    std::size_t comp_idx;
    int which; // 0 = interval start, 1 = interval end, 2 = isolated point
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// One Gauss-Newton step toward |x - g| = 1 for all census generators.
Point3 gauss_newton_project(const Point3& x0, const std::vector<Point3>& gens) {
    double jt_j[3][3] = {};
    double jt_r[3] = {};
    for (const auto& g : gens) {
        const Vec3 d = x0 - g;
        const double nd = d.norm();
        if (nd < 1e-12) continue;
        const Vec3 row = d / nd;
        const double r = nd - 1.0;
        const double rv[3] = {row.x, row.y, row.z};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) jt_j[a][b] += rv[a] * rv[b];
            jt_r[a] += rv[a] * r;
        }
    }
    // Light damping keeps the solve well posed for two-generator clusters.
    for (int a = 0; a < 3; ++a) jt_j[a][a] += 1e-12;
    double a[3][4];
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = jt_j[r][c];
        a[r][3] = -jt_r[r];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-20) return x0;
        std::swap(a[piv], a[col]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return x0 + Vec3{a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

std::vector<int> census_generators(const Point3& x, const Configuration& v, double band) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(dist(x, v[i]) - 1.0) <= band) out.push_back(v.labels()[i]);
    return out;
}

} // namespace

FaceComplex build_face_complex(const Configuration& v) {
    const Tolerance& tol = v.tol();
    const std::size_t n = v.size();
    if (n < 3) fail(Errc::InvalidSpec, "face complex needs at least 3 generators (2 give a lens)");
    if (v.circumradius() >= 1.0 - tol.eq_dist)
        fail(Errc::NotFullDimensional, "circumradius must be below 1");

    // Tightness gate. With unit diameter the two-diameter certificate makes
    // this exact; otherwise the witness search decides.
    {
        const EssentialityReport rep = essential_points(v);
        if (!rep.inessential.empty()) {
            std::string who;
            for (int l : rep.inessential) who += std::to_string(l) + " ";
            fail(Errc::NotTight, "inessential points present: " + who);
        }
    }

    FaceComplex fc;
    fc.config = v;

    // Pass 1: boundary components on every carrier circle.
    std::vector<PairData> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(v[i], v[j]);
            if (d >= 2.0 - tol.eq_dist) continue; // no circle
            PairData pd;
            pd.i = i;
            pd.j = j;
            pd.circle = intersection_circle(v[i], v[j], tol);
            pd.comps = components_on(pd.circle, v, i, j);
            if (!pd.comps.is_empty()) pairs.push_back(std::move(pd));
        }
    }

    // Pass 2: principal-vertex candidates = component endpoints and
    // isolated points; cluster within the merge radius.
    std::vector<Candidate> cands;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& pd = pairs[p];
        for (std::size_t c = 0; c < pd.comps.intervals.size(); ++c) {
            const AngularInterval& iv = pd.comps.intervals[c];
            if (iv.is_point(tol.angle_eps)) {
                cands.push_back({pd.circle.point(iv.midpoint()), p, c, 2});
            } else {
                cands.push_back({pd.circle.point(iv.start), p, c, 0});
                cands.push_back({pd.circle.point(iv.end), p, c, 1});
            }
        }
    }

    UnionFind uf(cands.size());
    for (std::size_t a = 0; a < cands.size(); ++a)
        for (std::size_t b = a + 1; b < cands.size(); ++b)
            if (dist(cands[a].pos, cands[b].pos) <= tol.vertex_merge) uf.unite(int(a), int(b));

    std::map<int, std::vector<std::size_t>> clusters;
    for (std::size_t a = 0; a < cands.size(); ++a) clusters[uf.find(int(a))].push_back(a);

    std::vector<int> cand_vertex(cands.size(), -1);
    for (const auto& [root, members] : clusters) {
        Point3 centroid{0, 0, 0};
        for (std::size_t m : members) centroid += cands[m].pos;
        centroid = centroid / double(members.size());

        // Snap to a generator point when one is in range; those positions
        // are exact input data. Otherwise re-project the centroid onto the
        // unit-distance constraints with one Gauss-Newton step.
        int config_label = -1;
        Point3 pos = centroid;
        for (std::size_t i = 0; i < n; ++i) {
            if (dist(centroid, v[i]) <= tol.vertex_merge) {
                config_label = v.labels()[i];
                pos = v[i];
                break;
            }
        }
        if (config_label < 0) {
            std::vector<Point3> gen_pts;
            for (int l : census_generators(pos, v, 2.0 * tol.vertex_merge))
                gen_pts.push_back(fc.generator_point(l));
            pos = gauss_newton_project(pos, gen_pts);
        }
        std::vector<int> inc = census_generators(pos, v, 2.0 * tol.vertex_merge);
        std::sort(inc.begin(), inc.end());
        if (inc.size() < 3)
            fail(Errc::ToleranceConflict,
                 "component endpoint with fewer than 3 unit-distance generators");
        // Every member endpoint's own pair must be accounted for; a mixed
        // cluster merging distinct combinatorial vertices shows up here.
        for (std::size_t m : members) {
            const auto& pd = pairs[cands[m].pair_idx];
            const int la = v.labels()[pd.i], lb = v.labels()[pd.j];
            if (!std::count(inc.begin(), inc.end(), la) || !std::count(inc.begin(), inc.end(), lb))
                fail(Errc::ToleranceConflict, "vertex cluster merges distinct combinatorial vertices");
            if (dist(cands[m].pos, pos) > 2.0 * tol.vertex_merge)
                fail(Errc::ToleranceConflict, "vertex cluster spread exceeds merge radius");
        }
        FcVertex vert;
        vert.id = fc.v_count();
        vert.position = pos;
        vert.principal = true;
        vert.incident_generators = inc;
        vert.config_label = config_label;
        for (std::size_t m : members) cand_vertex[m] = vert.id;
        fc.vertices.push_back(std::move(vert));
    }

    // Pass 3: dangling vertices (generator points on exactly two facets) and
    // any principal vertex sitting in the interior of a component. Both
    // split their component.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<double, int>>> splits;

    const auto locate_and_split = [&](const Point3& pt, int vertex_id, std::size_t pair_idx) {
        const PairData& pd = pairs[pair_idx];
        const double theta = wrap_angle(pd.circle.angle_of(pt));
        for (std::size_t c = 0; c < pd.comps.intervals.size(); ++c) {
            const AngularInterval& iv = pd.comps.intervals[c];
            if (!iv.contains(theta, tol.angle_eps)) continue;
            if (iv.is_point(tol.angle_eps)) return true; // already an isolated vertex
            const double off = wrap_angle(theta - iv.start);
            if (off <= tol.angle_eps || off >= iv.length() - tol.angle_eps) return true; // endpoint
            splits[{pair_idx, c}].push_back({off, vertex_id});
            return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<int> at_one = census_generators(v[i], v, tol.eq_dist * 2.0);
        std::vector<int> others;
        for (int l : at_one)
            if (l != v.labels()[i]) others.push_back(l);
        std::sort(others.begin(), others.end());
        if (others.size() != 2) continue;
        if (!in_ball_set(v, v[i])) continue;

        // Locate on the carrier circle of its two facets.
        std::size_t pair_idx = pairs.size();
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const int la = v.labels()[pairs[p].i], lb = v.labels()[pairs[p].j];
            if ((la == others[0] && lb == others[1]) || (la == others[1] && lb == others[0])) {
                pair_idx = p;
                break;
            }
        }
        if (pair_idx == pairs.size())
            fail(Errc::InternalInvariantViolation, "dangling candidate without carrier components");

        // Ambiguity with a principal vertex is surfaced, not resolved.
        for (const auto& w : fc.vertices)
            if (dist(w.position, v[i]) <= tol.vertex_merge)
                fail(Errc::ToleranceConflict, "dangling candidate coincides with a principal vertex");

        const PairData& pd = pairs[pair_idx];
        const double theta = wrap_angle(pd.circle.angle_of(v[i]));
        bool placed = false;
        for (std::size_t c = 0; c < pd.comps.intervals.size() && !placed; ++c) {
            const AngularInterval& iv = pd.comps.intervals[c];
            if (!iv.contains(theta, tol.angle_eps)) continue;
            if (iv.is_point(tol.angle_eps))
                fail(Errc::ToleranceConflict, "dangling candidate on an isolated component");
            const double off = wrap_angle(theta - iv.start);
            if (off <= tol.angle_eps || off >= iv.length() - tol.angle_eps)
                fail(Errc::ToleranceConflict,
                     "dangling candidate within angular slack of a component endpoint");
            FcVertex vert;
            vert.id = fc.v_count();
            vert.position = v[i];
            vert.principal = false;
            vert.incident_generators = others;
            vert.config_label = v.labels()[i];
            fc.vertices.push_back(vert);
            splits[{pair_idx, c}].push_back({off, vert.id});
            placed = true;
        }
        if (!placed)
            fail(Errc::InternalInvariantViolation,
                 "dangling candidate not inside any boundary component");
    }

    // Principal vertices interior to a component of some other facet pair
    // (tangential incidence) also force a split there.
    for (const auto& w : fc.vertices) {
        if (!w.principal) continue;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const int la = v.labels()[pairs[p].i], lb = v.labels()[pairs[p].j];
            if (!std::count(w.incident_generators.begin(), w.incident_generators.end(), la) ||
                !std::count(w.incident_generators.begin(), w.incident_generators.end(), lb))
                continue;
            locate_and_split(w.position, w.id, p);
        }
    }

    // Pass 4: split components into edges.
    const auto cluster_of = [&](std::size_t pair_idx, std::size_t comp_idx, int which) {
        for (std::size_t m = 0; m < cands.size(); ++m)
            if (cands[m].pair_idx == pair_idx && cands[m].comp_idx == comp_idx &&
                cands[m].which == which)
                return cand_vertex[m];
        fail(Errc::InternalInvariantViolation, "missing endpoint candidate");
    };

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const PairData& pd = pairs[p];
        const int la = v.labels()[pd.i], lb = v.labels()[pd.j];
        const std::array<int, 2> gens = {std::min(la, lb), std::max(la, lb)};
        for (std::size_t c = 0; c < pd.comps.intervals.size(); ++c) {
            const AngularInterval& iv = pd.comps.intervals[c];
            if (iv.is_point(tol.angle_eps)) continue;

            std::vector<std::pair<double, int>> cuts; // (offset from start, vertex id)
            if (auto it = splits.find({p, c}); it != splits.end()) cuts = it->second;
            std::sort(cuts.begin(), cuts.end());
            cuts.insert(cuts.begin(), {0.0, cluster_of(p, c, 0)});
            cuts.push_back({iv.length(), cluster_of(p, c, 1)});

            for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
                FcEdge e;
                e.id = fc.e_count();
                e.circle = pd.circle;
                e.generators = gens;
                e.interval = {wrap_angle(iv.start + cuts[s].first),
                              wrap_angle(iv.start + cuts[s + 1].first)};
                e.endpoints = {cuts[s].second, cuts[s + 1].second};
                e.is_short = e.interval.length() < kPi - tol.angle_eps;
                fc.edges.push_back(e);
            }
        }
    }

    // Pass 5: facet boundary circuits, ordered angularly around the cap axis.
    for (std::size_t i = 0; i < n; ++i) {
        const int label = v.labels()[i];
        FcFacet f;
        f.id = fc.f_count();
        f.generator = label;

        std::vector<int> eids;
        for (const auto& e : fc.edges)
            if (e.generators[0] == label || e.generators[1] == label) eids.push_back(e.id);
        if (eids.size() < 2)
            fail(Errc::InternalInvariantViolation,
                 "facet boundary of generator " + std::to_string(label) + " is not a circuit");

        Vec3 axis{0, 0, 0};
        for (int eid : eids) {
            const FcEdge& e = fc.edges[eid];
            axis += e.circle.point(e.interval.midpoint()) - v[i];
        }
        if (axis.norm() < 1e-9)
            fail(Errc::InternalInvariantViolation, "degenerate facet axis");
        axis = normalized(axis);
        f.cap_axis = axis;

        Vec3 t1 = cross(axis, Vec3{0, 0, 1});
        if (t1.norm() < 1e-6) t1 = cross(axis, Vec3{0, 1, 0});
        t1 = normalized(t1);
        const Vec3 t2 = cross(axis, t1);

        std::sort(eids.begin(), eids.end(), [&](int a, int b) {
            const auto ang = [&](int eid) {
                const FcEdge& e = fc.edges[eid];
                const Vec3 d = e.circle.point(e.interval.midpoint()) - v[i];
                return std::atan2(dot(d, t2), dot(d, t1));
            };
            return ang(a) < ang(b);
        });

        const auto frame_angle = [&](const Point3& pt) {
            const Vec3 d = pt - v[i];
            return std::atan2(dot(d, t2), dot(d, t1));
        };

        const std::size_t k = eids.size();
        if (k == 2) {
            const auto& e0 = fc.edges[eids[0]];
            const auto& e1 = fc.edges[eids[1]];
            const bool same_pair =
                (e0.endpoints[0] == e1.endpoints[0] && e0.endpoints[1] == e1.endpoints[1]) ||
                (e0.endpoints[0] == e1.endpoints[1] && e0.endpoints[1] == e1.endpoints[0]);
            if (!same_pair)
                fail(Errc::InternalInvariantViolation, "two-edge facet boundary does not close");
            // Orient the digon counterclockwise around the cap axis: the
            // vertex angularly between the two edge midpoints follows the
            // first edge.
            const double a0 = frame_angle(e0.circle.point(e0.interval.midpoint()));
            const double a1 = frame_angle(e1.circle.point(e1.interval.midpoint()));
            int u0 = e0.endpoints[0], u1 = e0.endpoints[1];
            const double bu1 = frame_angle(fc.vertices[u1].position);
            if (wrap_angle(bu1 - a0) > wrap_angle(a1 - a0)) std::swap(u0, u1);
            f.boundary_vertices = {u0, u1};
            f.boundary_edges = {eids[0], eids[1]};
        } else {
            for (std::size_t s = 0; s < k; ++s) {
                const auto& prev = fc.edges[eids[(s + k - 1) % k]];
                const auto& cur = fc.edges[eids[s]];
                int shared = -1;
                int shared_count = 0;
                for (int a : prev.endpoints)
                    for (int b : cur.endpoints)
                        if (a == b) {
                            shared = a;
                            ++shared_count;
                        }
                if (shared_count == 0)
                    fail(Errc::InternalInvariantViolation,
                         "consecutive boundary edges share no vertex");
                if (shared_count > 1)
                    fail(Errc::NonGenericUnsupported,
                         "parallel boundary edges inside a larger circuit");
                f.boundary_vertices.push_back(shared);
                f.boundary_edges.push_back(eids[s]);
            }
            // Each edge must connect its neighbors in the assembled order.
            for (std::size_t s = 0; s < k; ++s) {
                const auto& cur = fc.edges[f.boundary_edges[s]];
                const int a = f.boundary_vertices[s];
                const int b = f.boundary_vertices[(s + 1) % k];
                const bool ok = (cur.endpoints[0] == a && cur.endpoints[1] == b) ||
                                (cur.endpoints[0] == b && cur.endpoints[1] == a);
                if (!ok)
                    fail(Errc::InternalInvariantViolation, "facet circuit edge order inconsistent");
            }
        }
        f.is_digonal = (k == 2);

        int principal_count = 0;
        std::map<int, int> seen;
        for (int vid : f.boundary_vertices) {
            if (fc.vertices[vid].principal) ++principal_count;
            if (++seen[vid] > 2)
                fail(Errc::NonGenericUnsupported, "facet meets a vertex more than twice");
        }
        if (principal_count < 2)
            fail(Errc::InternalInvariantViolation, "facet with fewer than 2 principal vertices");

        fc.facets.push_back(std::move(f));
    }

    // Pass 6: structural checks.
    if (euler_characteristic(fc) != 2)
        fail(Errc::InternalInvariantViolation, "Euler relation v - e + f = 2 violated");
    for (const auto& w : fc.vertices) {
        std::vector<int> on_facets;
        for (const auto& f : fc.facets)
            if (std::count(f.boundary_vertices.begin(), f.boundary_vertices.end(), w.id))
                on_facets.push_back(f.generator);
        std::sort(on_facets.begin(), on_facets.end());
        if (on_facets != w.incident_generators)
            fail(Errc::InternalInvariantViolation,
                 "vertex facet incidences disagree with unit-distance census");
    }
    return fc;
}

int euler_characteristic(const FaceComplex& fc) {
    return fc.v_count() - fc.e_count() + fc.f_count();
}

// ---------------------------------------------------------------------------
// Skeleton connectivity
// ---------------------------------------------------------------------------

bool is_two_connected_graph(int n_vertices, const std::vector<std::array<int, 2>>& edges) {
    if (n_vertices <= 0) return false;
    std::vector<std::vector<std::pair<int, int>>> adj(n_vertices); // (neighbor, edge id)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e][0]].push_back({edges[e][1], int(e)});
        adj[edges[e][1]].push_back({edges[e][0], int(e)});
    }
    std::vector<int> disc(n_vertices, -1), low(n_vertices, 0);
    int timer = 0;
    int visited = 0;
    bool articulation = false;

    // Iterative DFS; skipping only the entering edge id keeps parallel
    // edges usable as back edges.
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    ++visited;
    int root_children = 0;

    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next < adj[fr.v].size()) {
            const auto [to, eid] = adj[fr.v][fr.next++];
            if (eid == fr.parent_edge) continue;
            if (disc[to] == -1) {
                disc[to] = low[to] = timer++;
                ++visited;
                if (fr.v == 0) ++root_children;
                stack.push_back({to, eid, 0});
            } else {
                low[fr.v] = std::min(low[fr.v], disc[to]);
            }
        } else {
            const Frame done = fr;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& par = stack.back();
                low[par.v] = std::min(low[par.v], low[done.v]);
                if (par.v != 0 && low[done.v] >= disc[par.v]) articulation = true;
            }
        }
    }
    if (visited != n_vertices) return false;  // disconnected
    if (n_vertices <= 2) return true;         // nothing to cut
    if (root_children > 1) articulation = true;
    return !articulation;
}

bool is_two_connected(const FaceComplex& fc) {
    std::vector<std::array<int, 2>> edges;
    edges.reserve(fc.edges.size());
    for (const auto& e : fc.edges) edges.push_back(e.endpoints);
    return is_two_connected_graph(fc.v_count(), edges);
}

// ---------------------------------------------------------------------------
// Edge shortness
// ---------------------------------------------------------------------------

bool edge_is_short(const FaceComplex& fc, int edge_id) {
    const FcEdge& e = fc.edges.at(edge_id);
    const Tolerance& tol = fc.config.tol();
    const double len = e.interval.length();
    const bool by_length = len < kPi - tol.angle_eps;
    if (std::abs(len - kPi) <= tol.angle_eps) return false; // semicircle pinned to "not short"

    // Plane criterion, applicable per carrying facet with >= 3 vertices.
    const Point3 a = fc.vertices[e.endpoints[0]].position;
    const Point3 b = fc.vertices[e.endpoints[1]].position;
    const Point3 mid = e.circle.point(e.interval.midpoint());
    for (int side = 0; side < 2; ++side) {
        const int x_label = e.generators[side];
        const int y_label = e.generators[1 - side];
        const FcFacet& fx = fc.facets[fc.facet_of_generator(x_label)];
        std::vector<int> distinct = fx.boundary_vertices;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 3) continue;
        const Point3 x = fc.generator_point(x_label);
        const Point3 y = fc.generator_point(y_label);
        const Vec3 nrm = cross(a - x, b - x);
        if (nrm.norm() < 1e-9) continue;
        const double se = dot(mid - x, nrm);
        const double sy = dot(y - x, nrm);
        if (std::abs(se) < tol.eq_dist || std::abs(sy) < tol.eq_dist) continue;
        const bool by_plane = (se * sy < 0); // different sides <=> short
        if (by_plane != by_length)
            fail(Errc::ToleranceConflict, "edge shortness: length and plane criteria disagree");
    }
    return by_length;
}

std::vector<ValenceEntry> vertex_valence_check(const FaceComplex& fc) {
    std::vector<int> val(fc.v_count(), 0);
    for (const auto& e : fc.edges) {
        ++val[e.endpoints[0]];
        ++val[e.endpoints[1]];
    }
    std::vector<ValenceEntry> out;
    for (const auto& w : fc.vertices) {
        const int gens = static_cast<int>(w.incident_generators.size());
        out.push_back({w.id, val[w.id], gens, val[w.id] == gens});
    }
    return out;
}

} // namespace ballpoly
