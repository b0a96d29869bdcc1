#include "ballpoly/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ballpoly/vazsonyi.hpp"

namespace ballpoly {

// ---------------------------------------------------------------------------
// Dual arcs
// ---------------------------------------------------------------------------

namespace {

// The arc from angle s to angle e (counterclockwise) or its complement,
// whichever is not longer than a semicircle.
AngularInterval short_arc(double s, double e) {
    if (wrap_angle(e - s) <= kPi) return {wrap_angle(s), wrap_angle(e)};
    return {wrap_angle(e), wrap_angle(s)};
}

} // namespace

DualArcPair make_dual_arc_pair(const Point3& a, const Point3& b, const Point3& x, const Point3& y,
                               const Tolerance& tol) {
    const double slack = 4.0 * tol.eq_dist;
    for (double d : {dist(x, a), dist(x, b), dist(y, a), dist(y, b)})
        if (std::abs(d - 1.0) > slack)
            fail(Errc::InvalidSpec, "quadruple is not in equilateral position");
    DualArcPair p;
    p.a = a;
    p.b = b;
    p.x = x;
    p.y = y;
    p.circle_xy = intersection_circle(x, y, tol);
    p.circle_ab = intersection_circle(a, b, tol);
    p.short_arc_ab = short_arc(p.circle_xy.angle_of(a), p.circle_xy.angle_of(b));
    p.short_arc_xy = short_arc(p.circle_ab.angle_of(x), p.circle_ab.angle_of(y));
    return p;
}

namespace {

enum class ArcRegion { endpoint, short_interior, long_interior };

ArcRegion classify_on(const Circle3& circle, const AngularInterval& short_iv, const Point3& pt,
                      double angle_eps) {
    const double theta = wrap_angle(circle.angle_of(pt));
    const double s = short_iv.start;
    const double e = short_iv.end;
    const auto near_angle = [&](double t) {
        const double d = wrap_angle(theta - t);
        return d <= angle_eps || d >= kTwoPi - angle_eps;
    };
    if (near_angle(s) || near_angle(e)) return ArcRegion::endpoint;
    return short_iv.contains(theta) ? ArcRegion::short_interior : ArcRegion::long_interior;
}

} // namespace

DistanceClass dual_arc_distance_classify(const DualArcPair& pair, const Point3& c, const Point3& z,
                                         const Tolerance& tol) {
    const double slack = 4.0 * tol.eq_dist;
    if (std::abs(dist(c, pair.x) - 1.0) > slack || std::abs(dist(c, pair.y) - 1.0) > slack)
        fail(Errc::InvalidSpec, "c does not lie on the circle around x,y");
    if (std::abs(dist(z, pair.a) - 1.0) > slack || std::abs(dist(z, pair.b) - 1.0) > slack)
        fail(Errc::InvalidSpec, "z does not lie on the circle around a,b");

    const ArcRegion rc = classify_on(pair.circle_xy, pair.short_arc_ab, c, tol.angle_eps);
    const ArcRegion rz = classify_on(pair.circle_ab, pair.short_arc_xy, z, tol.angle_eps);

    DistanceClass result;
    if (rc == ArcRegion::endpoint || rz == ArcRegion::endpoint)
        result = DistanceClass::equal_1;
    else if (rc == rz)
        result = DistanceClass::greater_than_1; // both short or both long
    else
        result = DistanceClass::less_than_1;

    // The analytic classification must match the direct distance.
    const double d = dist(c, z);
    const double assert_slack = 1e-8;
    const bool ok = (result == DistanceClass::equal_1 && std::abs(d - 1.0) <= assert_slack) ||
                    (result == DistanceClass::greater_than_1 && d > 1.0 - assert_slack) ||
                    (result == DistanceClass::less_than_1 && d < 1.0 + assert_slack);
    if (!ok)
        fail(Errc::ToleranceConflict, "dual-arc classification contradicts direct distance");
    return result;
}

// ---------------------------------------------------------------------------
// Canonical duality
// ---------------------------------------------------------------------------

SelfDuality canonical_duality(const FaceComplex& fc) {
    const std::size_t n = fc.config.size();
    if (n < 4) fail(Errc::NotExtremalInput, "canonical duality needs at least 4 points");
    if (fc.v_count() != static_cast<int>(n))
        fail(Errc::NotExtremalInput, "vertex set differs from the generator set");
    std::map<int, int> vertex_of_label;
    for (const auto& w : fc.vertices) {
        if (w.config_label < 0)
            fail(Errc::NotExtremalInput, "complex has a vertex that is not a generator point");
        vertex_of_label[w.config_label] = w.id;
    }
    if (vertex_of_label.size() != n)
        fail(Errc::NotExtremalInput, "vertex set differs from the generator set");
    {
        const DiameterGraph g = diameter_graph(fc.config);
        if (g.e_count() != 2 * n - 2)
            fail(Errc::NotExtremalInput, "diameter count is not 2n - 2");
    }

    SelfDuality d;
    d.vertex_to_facet.assign(fc.v_count(), -1);
    d.facet_to_vertex.assign(fc.f_count(), -1);
    d.edge_to_edge.assign(fc.e_count(), -1);

    for (const auto& w : fc.vertices) {
        const int fid = fc.facet_of_generator(w.config_label);
        d.vertex_to_facet[w.id] = fid;
        d.facet_to_vertex[fid] = w.id;
    }

    // Dual edge lookup: swap endpoint labels with generator labels.
    using Key = std::array<int, 4>; // endpoint labels (sorted), generator labels (sorted)
    const auto key_of = [&](const FcEdge& e) {
        int ea = fc.vertices[e.endpoints[0]].config_label;
        int eb = fc.vertices[e.endpoints[1]].config_label;
        if (ea > eb) std::swap(ea, eb);
        return Key{ea, eb, e.generators[0], e.generators[1]};
    };
    std::map<Key, int> by_key;
    for (const auto& e : fc.edges) {
        if (!by_key.emplace(key_of(e), e.id).second)
            fail(Errc::DualityFailure, "two edges share endpoints and carrier generators");
    }
    for (const auto& e : fc.edges) {
        const Key k = key_of(e);
        const Key dual_key{k[2], k[3], k[0], k[1]};
        const auto it = by_key.find(dual_key);
        if (it == by_key.end())
            fail(Errc::DualityFailure, "dual edge not found; input not extremal or complex bug");
        d.edge_to_edge[e.id] = it->second;
    }

    // Involution and order reversal, checked exhaustively.
    for (const auto& w : fc.vertices)
        if (d.facet_to_vertex[d.vertex_to_facet[w.id]] != w.id)
            fail(Errc::DualityFailure, "vertex-facet map is not an involution");
    for (const auto& e : fc.edges) {
        if (d.edge_to_edge[d.edge_to_edge[e.id]] != e.id)
            fail(Errc::DualityFailure, "edge map is not an involution");
        const FcEdge& de = fc.edges[d.edge_to_edge[e.id]];
        // Endpoint of e -> its facet must carry the dual edge.
        for (int vid : e.endpoints) {
            const int lbl = fc.vertices[vid].config_label;
            if (de.generators[0] != lbl && de.generators[1] != lbl)
                fail(Errc::DualityFailure, "order reversal fails on a vertex-edge incidence");
        }
        // Carrier facet of e -> its vertex must be an endpoint of the dual edge.
        for (int g : e.generators) {
            const int vid = vertex_of_label.at(g);
            if (de.endpoints[0] != vid && de.endpoints[1] != vid)
                fail(Errc::DualityFailure, "order reversal fails on an edge-facet incidence");
        }
    }
    for (const auto& w : fc.vertices) {
        for (int g : w.incident_generators) {
            const auto& dual_vertex = fc.vertices[vertex_of_label.at(g)];
            const auto& inc = dual_vertex.incident_generators;
            if (!std::count(inc.begin(), inc.end(), w.config_label))
                fail(Errc::DualityFailure, "order reversal fails on a vertex-facet incidence");
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Abstract complexes
// ---------------------------------------------------------------------------

bool AbstractComplex::vertex_on_facet(int v, int f) const {
    const auto& circ = facet_vertices[f];
    return std::count(circ.begin(), circ.end(), v) > 0;
}

int AbstractComplex::vertex_valence(int v) const {
    int val = 0;
    for (const auto& e : edges)
        if (e.verts[0] == v || e.verts[1] == v) ++val;
    return val;
}

AbstractComplex make_abstract_complex(int n_vertices, std::vector<std::vector<int>> facet_circuits) {
    AbstractComplex c;
    c.n_vertices = n_vertices;
    c.facet_vertices = std::move(facet_circuits);
    std::map<std::array<int, 2>, std::vector<int>> pair_facets;
    for (int f = 0; f < c.n_facets(); ++f) {
        const auto& circ = c.facet_vertices[f];
        if (circ.size() < 3) fail(Errc::InvalidSpec, "facet circuits need at least 3 vertices here");
        for (std::size_t i = 0; i < circ.size(); ++i) {
            int a = circ[i], b = circ[(i + 1) % circ.size()];
            if (a == b) fail(Errc::InvalidSpec, "degenerate circuit");
            if (a > b) std::swap(a, b);
            pair_facets[{a, b}].push_back(f);
        }
    }
    for (const auto& [verts, facets] : pair_facets) {
        if (facets.size() != 2)
            fail(Errc::InvalidSpec, "every edge must lie on exactly two facets");
        c.edges.push_back({verts, {std::min(facets[0], facets[1]), std::max(facets[0], facets[1])}});
    }
    return c;
}

AbstractComplex to_abstract(const FaceComplex& fc) {
    AbstractComplex c;
    c.n_vertices = fc.v_count();
    for (const auto& f : fc.facets) c.facet_vertices.push_back(f.boundary_vertices);
    for (const auto& e : fc.edges) {
        const int fa = fc.facet_of_generator(e.generators[0]);
        const int fb = fc.facet_of_generator(e.generators[1]);
        c.edges.push_back({{std::min(e.endpoints[0], e.endpoints[1]),
                            std::max(e.endpoints[0], e.endpoints[1])},
                           {std::min(fa, fb), std::max(fa, fb)}});
    }
    return c;
}

AbstractComplex apexed_prism_complex(int n) {
    if (n < 3) fail(Errc::InvalidOrder, "prism base needs at least 3 vertices");
    // Vertex ids: apex 0, base ring a_i = 1..n, glued ring b_i = n+1..2n.
    const auto a = [&](int i) { return 1 + ((i - 1 + n) % n); };
    const auto b = [&](int i) { return n + 1 + ((i - 1 + n) % n); };
    std::vector<std::vector<int>> facets;
    std::vector<int> base;
    for (int i = 1; i <= n; ++i) base.push_back(a(i));
    facets.push_back(base);
    for (int i = 1; i <= n; ++i) facets.push_back({a(i), a(i + 1), b(i + 1), b(i)});
    for (int i = 1; i <= n; ++i) facets.push_back({0, b(i), b(i + 1)});
    return make_abstract_complex(2 * n + 1, std::move(facets));
}

// ---------------------------------------------------------------------------
// Barycentric subdivision
// ---------------------------------------------------------------------------

namespace {

std::vector<int> distinct_circuit_vertices(const std::vector<int>& circuit) {
    std::vector<int> d = circuit;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

// Margin of x as an interior point of the facet of generator y:
// min over other generators of (1 - |x - g|).
double facet_margin(const FaceComplex& fc, int y_label, const Point3& x) {
    double m = 2.0;
    for (std::size_t i = 0; i < fc.config.size(); ++i) {
        if (fc.config.labels()[i] == y_label) continue;
        m = std::min(m, 1.0 - dist(x, fc.config[i]));
    }
    return m;
}

Point3 improve_interior(const FaceComplex& fc, int y_label, Point3 x) {
    const Point3 y = fc.generator_point(y_label);
    double best = facet_margin(fc, y_label, x);
    double step = 0.25;
    for (int it = 0; it < 120 && step > 1e-12; ++it) {
        // Move away from the closest offending generator, on the sphere.
        Point3 worst;
        double worst_m = 2.0;
        for (std::size_t i = 0; i < fc.config.size(); ++i) {
            if (fc.config.labels()[i] == y_label) continue;
            const double m = 1.0 - dist(x, fc.config[i]);
            if (m < worst_m) {
                worst_m = m;
                worst = fc.config[i];
            }
        }
        Vec3 grad = x - worst;
        const double gn = grad.norm();
        if (gn > 1e-14) grad = grad / gn;
        const Vec3 nrm = x - y;
        grad -= nrm * dot(grad, nrm);
        const Point3 cand = y + normalized((x - y) + grad * step);
        const double m = facet_margin(fc, y_label, cand);
        if (m > best) {
            best = m;
            x = cand;
        } else {
            step *= 0.5;
        }
    }
    return x;
}

} // namespace

std::size_t FlagComplex::two_simplex_count() const {
    std::size_t c = 0;
    for (const auto& s : simplices)
        if (s.size() == 3) ++c;
    return c;
}

FlagComplex barycentric_subdivision(const FaceComplex& fc) {
    FlagComplex k;
    k.n_vertices = fc.v_count();
    k.n_edges = fc.e_count();
    k.n_facets = fc.f_count();
    k.node_positions.resize(k.node_count());

    for (const auto& w : fc.vertices) k.node_positions[k.vertex_node(w.id)] = w.position;
    for (const auto& e : fc.edges)
        k.node_positions[k.edge_node(e.id)] = e.circle.point(e.interval.midpoint());

    const double eq = fc.config.tol().eq_dist;
    for (const auto& f : fc.facets) {
        const Point3 y = fc.generator_point(f.generator);
        const std::vector<int> verts = distinct_circuit_vertices(f.boundary_vertices);
        Vec3 sum{0, 0, 0};
        for (int vid : verts) sum += fc.vertices[vid].position - y;
        // A digon's hull degenerates to the geodesic between its two
        // vertices; the normalized mean is exactly its midpoint.
        if (sum.norm() < 1e-9)
            fail(Errc::BarycenterFallback, "facet vertex directions cancel");
        Point3 z = y + normalized(sum);
        if (facet_margin(fc, f.generator, z) <= eq) {
            z = improve_interior(fc, f.generator, z);
            if (facet_margin(fc, f.generator, z) <= eq)
                fail(Errc::BarycenterFallback, "no interior realization point found for a facet");
        }
        k.node_positions[k.facet_node(f.id)] = z;
    }

    // Simplices: all chains of nonempty faces.
    for (int v = 0; v < k.n_vertices; ++v) k.simplices.push_back({k.vertex_node(v)});
    for (int e = 0; e < k.n_edges; ++e) k.simplices.push_back({k.edge_node(e)});
    for (int f = 0; f < k.n_facets; ++f) k.simplices.push_back({k.facet_node(f)});
    for (const auto& e : fc.edges)
        for (int vid : e.endpoints) k.simplices.push_back({k.vertex_node(vid), k.edge_node(e.id)});
    for (const auto& f : fc.facets) {
        for (int vid : distinct_circuit_vertices(f.boundary_vertices))
            k.simplices.push_back({k.vertex_node(vid), k.facet_node(f.id)});
        std::vector<int> eids = f.boundary_edges;
        std::sort(eids.begin(), eids.end());
        eids.erase(std::unique(eids.begin(), eids.end()), eids.end());
        for (int eid : eids) {
            k.simplices.push_back({k.edge_node(eid), k.facet_node(f.id)});
            for (int vid : fc.edges[eid].endpoints)
                k.simplices.push_back(
                    {k.vertex_node(vid), k.edge_node(eid), k.facet_node(f.id)});
        }
    }
    return k;
}

FlagComplex abstract_flag_complex(const AbstractComplex& c) {
    FlagComplex k;
    k.n_vertices = c.n_vertices;
    k.n_edges = c.n_edges();
    k.n_facets = c.n_facets();

    for (int v = 0; v < k.n_vertices; ++v) k.simplices.push_back({k.vertex_node(v)});
    for (int e = 0; e < k.n_edges; ++e) k.simplices.push_back({k.edge_node(e)});
    for (int f = 0; f < k.n_facets; ++f) k.simplices.push_back({k.facet_node(f)});
    for (int e = 0; e < k.n_edges; ++e)
        for (int vid : c.edges[e].verts) k.simplices.push_back({k.vertex_node(vid), k.edge_node(e)});
    for (int f = 0; f < k.n_facets; ++f)
        for (int vid : distinct_circuit_vertices(c.facet_vertices[f]))
            k.simplices.push_back({k.vertex_node(vid), k.facet_node(f)});
    for (int e = 0; e < k.n_edges; ++e) {
        for (int f : c.edges[e].facets) {
            k.simplices.push_back({k.edge_node(e), k.facet_node(f)});
            for (int vid : c.edges[e].verts)
                k.simplices.push_back({k.vertex_node(vid), k.edge_node(e), k.facet_node(f)});
        }
    }
    return k;
}

FixedPointReport fixed_point_report(const SelfDuality& d, const FlagComplex& k) {
    const auto map_node = [&](int node) {
        if (node < k.n_vertices) return k.facet_node(d.vertex_to_facet[node]);
        if (node < k.n_vertices + k.n_edges) return k.edge_node(d.edge_to_edge[node - k.n_vertices]);
        return k.vertex_node(d.facet_to_vertex[node - k.n_vertices - k.n_edges]);
    };
    FixedPointReport rep{true, true};
    for (const auto& s : k.simplices) {
        std::vector<int> img;
        img.reserve(s.size());
        for (int node : s) img.push_back(map_node(node));
        std::vector<int> a = s, b = img;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) rep.cell_fixed_point_free = false;
        for (int node : b)
            if (std::binary_search(a.begin(), a.end(), node)) rep.vertex_disjoint = false;
    }
    return rep;
}

bool is_fixed_point_free(const SelfDuality& d, const FlagComplex& k) {
    return fixed_point_report(d, k).cell_fixed_point_free;
}

// ---------------------------------------------------------------------------
// Enumeration of involutory self-dualities
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
    const AbstractComplex& c;
    int n;
    std::vector<int> sigma_vf;  // vertex -> facet
    std::vector<int> sigma_fv;  // facet -> vertex
    std::vector<int> vertex_order;
    std::vector<ClassifiedDuality> results;
    FlagComplex flags;

    explicit Enumerator(const AbstractComplex& complex) : c(complex) {
        n = c.n_vertices;
        sigma_vf.assign(n, -1);
        sigma_fv.assign(c.n_facets(), -1);
        vertex_order.resize(n);
        for (int v = 0; v < n; ++v) vertex_order[v] = v;
        // High-valence vertices first: they have the fewest candidate facets.
        std::sort(vertex_order.begin(), vertex_order.end(), [&](int a, int b) {
            return c.vertex_valence(a) > c.vertex_valence(b);
        });
        flags = abstract_flag_complex(c);
    }

    bool compatible(int v, int f) const {
        // The edge map sends the edges at v to the edges of f, so the
        // valence must match the circuit length.
        if (c.vertex_valence(v) != static_cast<int>(c.facet_vertices[f].size())) return false;
        // Incidence symmetry against every settled pair: u on sigma(v)
        // exactly when v on sigma(u).
        for (int u = 0; u < n; ++u) {
            if (sigma_vf[u] < 0) continue;
            if (c.vertex_on_facet(u, f) != c.vertex_on_facet(v, sigma_vf[u])) return false;
        }
        return true;
    }

    void try_finish() {
        // Extend the vertex-facet pairing to the edges.
        std::map<std::array<int, 2>, int> edge_by_verts;
        for (int e = 0; e < c.n_edges(); ++e) {
            if (!edge_by_verts.emplace(c.edges[e].verts, e).second) return; // parallel edges
        }
        std::vector<int> emap(c.n_edges(), -1);
        for (int e = 0; e < c.n_edges(); ++e) {
            int va = sigma_fv[c.edges[e].facets[0]];
            int vb = sigma_fv[c.edges[e].facets[1]];
            if (va > vb) std::swap(va, vb);
            const auto it = edge_by_verts.find({va, vb});
            if (it == edge_by_verts.end()) return;
            const auto& target = c.edges[it->second];
            // The image edge's facets must be the images of e's vertices.
            int fa = sigma_vf[c.edges[e].verts[0]];
            int fb = sigma_vf[c.edges[e].verts[1]];
            if (fa > fb) std::swap(fa, fb);
            if (target.facets != std::array<int, 2>{fa, fb}) return;
            emap[e] = it->second;
        }
        for (int e = 0; e < c.n_edges(); ++e)
            if (emap[emap[e]] != e) return;

        SelfDuality d;
        d.vertex_to_facet = sigma_vf;
        d.facet_to_vertex = sigma_fv;
        d.edge_to_edge = emap;
        results.push_back({d, fixed_point_report(d, flags)});
    }

    void backtrack(std::size_t idx) {
        if (idx == vertex_order.size()) {
            try_finish();
            return;
        }
        const int v = vertex_order[idx];
        for (int f = 0; f < c.n_facets(); ++f) {
            if (sigma_fv[f] >= 0) continue;
            if (!compatible(v, f)) continue;
            sigma_vf[v] = f;
            sigma_fv[f] = v;
            backtrack(idx + 1);
            sigma_vf[v] = -1;
            sigma_fv[f] = -1;
        }
    }
};

} // namespace

std::vector<ClassifiedDuality> enumerate_self_dualities(const AbstractComplex& c) {
    if (c.n_vertices != c.n_facets()) return {};
    if (c.n_vertices > 30 || c.n_facets() > 30 || c.n_edges() > 60)
        fail(Errc::TooLarge, "enumeration is limited to small complexes");
    Enumerator en(c);
    en.backtrack(0);
    return std::move(en.results);
}

// ---------------------------------------------------------------------------
// Complex isomorphism
// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
    const AbstractComplex& a;
    const AbstractComplex& b;
    std::vector<int> map_ab;   // vertex of a -> vertex of b
    std::vector<bool> used_b;
    std::map<std::vector<int>, int> b_facet_by_verts;
    std::vector<std::vector<int>> adj_a, adj_b; // adjacency multiplicity

    IsoSearch(const AbstractComplex& a_, const AbstractComplex& b_) : a(a_), b(b_) {
        map_ab.assign(a.n_vertices, -1);
        used_b.assign(b.n_vertices, false);
        for (int f = 0; f < b.n_facets(); ++f) {
            auto key = b.facet_vertices[f];
            std::sort(key.begin(), key.end());
            b_facet_by_verts[key] = f;
        }
        adj_a.assign(a.n_vertices, std::vector<int>(a.n_vertices, 0));
        adj_b.assign(b.n_vertices, std::vector<int>(b.n_vertices, 0));
        for (const auto& e : a.edges) {
            ++adj_a[e.verts[0]][e.verts[1]];
            ++adj_a[e.verts[1]][e.verts[0]];
        }
        for (const auto& e : b.edges) {
            ++adj_b[e.verts[0]][e.verts[1]];
            ++adj_b[e.verts[1]][e.verts[0]];
        }
    }

    bool facets_match() const {
        for (int f = 0; f < a.n_facets(); ++f) {
            std::vector<int> img;
            for (int v : a.facet_vertices[f]) img.push_back(map_ab[v]);
            std::sort(img.begin(), img.end());
            if (!b_facet_by_verts.count(img)) return false;
        }
        return true;
    }

    bool search(int v) {
        if (v == a.n_vertices) return facets_match();
        for (int w = 0; w < b.n_vertices; ++w) {
            if (used_b[w]) continue;
            if (a.vertex_valence(v) != b.vertex_valence(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adj_a[v][u] != adj_b[w][map_ab[u]]) ok = false;
            if (!ok) continue;
            map_ab[v] = w;
            used_b[w] = true;
            if (search(v + 1)) return true;
            used_b[w] = false;
            map_ab[v] = -1;
        }
        return false;
    }
};

} // namespace

bool complexes_isomorphic(const AbstractComplex& a, const AbstractComplex& b) {
    if (a.n_vertices != b.n_vertices || a.n_facets() != b.n_facets() || a.n_edges() != b.n_edges())
        return false;
    IsoSearch s(a, b);
    return s.search(0);
}

} // namespace ballpoly
