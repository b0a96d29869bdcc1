#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ballpoly/face_complex.hpp"

namespace ballpoly::selftest {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Runs every module's invariant battery with the given seed. Logs one line
// per check when a stream is supplied.
std::vector<CheckResult> run_all(std::uint64_t seed, std::ostream* log = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

// Ray-shooting cross-validation of a built complex: samples boundary
// points from an interior point, classifies them by their near-unit
// generator sets, and checks the strata against the complex (facet cover,
// edge components, vertex proximity). Returns the number of disagreements.
struct BoundaryOracleStats {
    int samples = 0;
    int uncovered = 0;        // boundary point on no facet
    int edge_mismatch = 0;    // two-generator stratum without a matching component
    int vertex_mismatch = 0;  // >= 3-generator stratum without a nearby vertex
    std::vector<int> facet_hits;
};
BoundaryOracleStats boundary_oracle(const FaceComplex& fc, int samples, double shell,
                                    std::uint64_t seed);

} // namespace ballpoly::selftest
