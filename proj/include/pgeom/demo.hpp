#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pgeom/scalar.hpp"

namespace pgeom {

enum class DemoBackend { Exact, Float };

struct InvarianceTrial {
    bool pass = false;
    std::string before;
    std::string after;
    std::string detail;  // counterexample serialization, only on failure
};

struct InvarianceReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int passed = 0;
    DemoBackend backend = DemoBackend::Exact;
    std::vector<InvarianceTrial> results;

    bool all_pass() const { return passed == trials; }
};

// Draws `trials` random (collinear quadruple, homography) pairs and checks
// cross-ratio preservation: exact equality on the exact backend, relative
// 1e-6 agreement on the float backend. Trial i is generated from
// split(seed, i), so results do not depend on scheduling. The parallel
// version runs trials under OpenMP and matches the serial reference.
InvarianceReport run_invariance_trials(std::uint64_t seed, int trials, DemoBackend backend);
InvarianceReport run_invariance_trials_serial(std::uint64_t seed, int trials, DemoBackend backend);

// The fixed regression configuration: affine quadruple (0, 1, 3, 10) and its
// image under the chart translation by (1, 0). Returns the two formatted
// cross-ratio values (both 27/20).
std::pair<std::string, std::string> fixed_translation_check();

// A small drawing of one collinear quadruple and its image under a
// homography, annotated with the (equal) cross-ratio values.
std::string invariance_figure_svg();

}  // namespace pgeom
