#include "ballpoly/vazsonyi.hpp"

#include <algorithm>

namespace ballpoly {

std::map<int, int> DiameterGraph::valences() const {
    std::map<int, int> val;
    for (int l : labels) val[l] = 0;
    for (const auto& e : edges) {
        ++val[e[0]];
        ++val[e[1]];
    }
    return val;
}

DiameterGraph diameter_graph(const Configuration& v) {
    if (v.size() < 2) fail(Errc::InvalidSpec, "diameter graph needs at least 2 points");
    DiameterGraph g;
    g.labels = v.labels();
    g.diam = v.diameter();
    const double band = v.tol().eq_dist * (1.0 + g.diam);
    double next_largest = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const double d = dist(v[i], v[j]);
            if (d >= g.diam - band) {
                const int a = v.labels()[i], b = v.labels()[j];
                g.edges.push_back({std::min(a, b), std::max(a, b)});
            } else {
                next_largest = std::max(next_largest, d);
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.spectral_gap = g.diam - band - next_largest;
    return g;
}

namespace {

// Structural criterion: V tight and V equal to vert B(V). Every diameter
// valence must be >= 2 (which also certifies tightness at unit diameter);
// then the built complex must have exactly the configuration points as
// vertices.
bool structural_criterion(const Configuration& unit, const DiameterGraph& g) {
    for (const auto& [label, val] : g.valences())
        if (val < 2) return false;
    const FaceComplex fc = build_face_complex(unit);
    if (fc.v_count() != static_cast<int>(unit.size())) return false;
    std::vector<int> matched;
    for (const auto& w : fc.vertices) {
        if (w.config_label < 0) return false;
        matched.push_back(w.config_label);
    }
    std::sort(matched.begin(), matched.end());
    return std::unique(matched.begin(), matched.end()) == matched.end();
}

} // namespace

ExtremalityVerdict check_extremal(const Configuration& v) {
    if (v.size() < 4) fail(Errc::InvalidSpec, "extremality is defined for at least 4 points");
    const double diam = v.diameter();
    if (!(diam > 0)) fail(Errc::InvalidSpec, "degenerate configuration");
    const double factor = 1.0 / diam;
    const Configuration unit = (std::abs(diam - 1.0) <= v.tol().eq_dist) ? v : v.scaled(factor);

    ExtremalityVerdict verdict;
    verdict.n = static_cast<int>(v.size());
    verdict.bound = 2 * verdict.n - 2;
    verdict.scale_factor = factor;

    const DiameterGraph g = diameter_graph(unit);
    verdict.e_count = static_cast<int>(g.e_count());
    verdict.spectral_gap = g.spectral_gap;
    verdict.valences = g.valences();
    verdict.is_extremal = (verdict.e_count == verdict.bound);

    verdict.ghs_cross_check = structural_criterion(unit, g);
    if (verdict.ghs_cross_check != verdict.is_extremal)
        fail(Errc::GhsCrossCheckFailure,
             "diameter count and vertex-set criteria disagree (e=" +
                 std::to_string(verdict.e_count) + ", bound=" + std::to_string(verdict.bound) + ")");

    if (verdict.is_extremal) {
        int min_val = verdict.n;
        for (const auto& [label, val] : verdict.valences) min_val = std::min(min_val, val);
        verdict.is_critical = (min_val >= 3);
    }
    return verdict;
}

namespace {

Configuration strip_two_valent(const Configuration& v, bool reverse_order) {
    std::vector<std::size_t> alive(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) alive[i] = i;

    while (true) {
        const Configuration cur = v.subset(alive);
        const DiameterGraph g = diameter_graph(cur);
        const auto val = g.valences();
        for (const auto& [label, d] : val)
            if (d <= 1)
                fail(Errc::NotExtremalInput,
                     "vertex of diameter valence <= 1; input is not extremal");
        std::size_t victim = alive.size();
        if (!reverse_order) {
            for (std::size_t k = 0; k < alive.size(); ++k)
                if (val.at(v.labels()[alive[k]]) == 2) {
                    victim = k;
                    break;
                }
        } else {
            for (std::size_t k = alive.size(); k-- > 0;)
                if (val.at(v.labels()[alive[k]]) == 2) {
                    victim = k;
                    break;
                }
        }
        if (victim == alive.size()) return cur;
        alive.erase(alive.begin() + victim);
    }
}

} // namespace

Configuration critical_core(const Configuration& v) {
    const Configuration a = strip_two_valent(v, false);
    const Configuration b = strip_two_valent(v, true);
    if (a.labels() != b.labels())
        fail(Errc::InternalInvariantViolation, "critical core depends on removal order");
    return a;
}

bool no_adjacent_two_valent(const Configuration& v) {
    const DiameterGraph g = diameter_graph(v);
    const auto val = g.valences();
    for (const auto& e : g.edges)
        if (val.at(e[0]) == 2 && val.at(e[1]) == 2) return false;
    return true;
}

bool is_strongly_critical(const Configuration& v) {
    const std::size_t n = v.size();
    if (n > 12) fail(Errc::TooLarge, "subset scan is limited to 12 points");
    const auto verdict = check_extremal(v);
    if (!verdict.is_extremal) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto popcount = static_cast<std::size_t>(__builtin_popcount(mask));
        if (popcount < 4 || popcount == n) continue;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) keep.push_back(i);
        try {
            if (check_extremal(v.subset(keep)).is_extremal) return false;
        } catch (const Error&) {
            // Degenerate subsets (coincident after rescale etc.) are not extremal.
        }
    }
    return true;
}

} // namespace ballpoly
