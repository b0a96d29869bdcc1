#pragma once

#include <array>
#include <map>
#include <vector>

#include "ballpoly/face_complex.hpp"

namespace ballpoly {

// Pairs realizing the maximum pairwise distance, within the classification
// band eq_dist * (1 + diam). spectral_gap records how far the next-largest
// distance sits below the band, so callers can spot fragile classifications.
struct DiameterGraph {
    std::vector<int> labels;
    std::vector<std::array<int, 2>> edges; // label pairs, sorted
    double diam = 0;
    double spectral_gap = 0;

    std::size_t e_count() const { return edges.size(); }
    std::map<int, int> valences() const;
};

DiameterGraph diameter_graph(const Configuration& v);

// Verdict of the diameter-count criterion e(V) = 2n - 2 against the
// independent structural criterion (V tight and V equal to the vertex set
// of its, ball polytope). The two must agree; disagreement is a tolerance or
// construction bug and is never resolved silently.
struct ExtremalityVerdict {
    int n = 0;
    int e_count = 0;
    int bound = 0; // 2n - 2
    bool is_extremal = false;
    bool is_critical = false;
    bool ghs_cross_check = false; // structural criterion, must equal is_extremal
    double scale_factor = 1.0;    // applied to normalize diam to 1
    double spectral_gap = 0;
    std::map<int, int> valences; // label -> diameter-graph valence
};

ExtremalityVerdict check_extremal(const Configuration& v);

// Successively removes 2-valent diameter-graph vertices until all valences
// are >= 3. The result is the unique maximal critical subconfiguration;
// order independence is verified by running two removal orders.
Configuration critical_core(const Configuration& v);

// No diameter edge joins two 2-valent vertices (contractual for extremal
// inputs).
bool no_adjacent_two_valent(const Configuration& v);

// Brute-force extremality scan over all proper subsets with >= 4 points;
// true when none is extremal. Exponential; guarded to n <= 12.
bool is_strongly_critical(const Configuration& v);

} // namespace ballpoly
