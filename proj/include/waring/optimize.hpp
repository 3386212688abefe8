// optimize.hpp
// Grid-based coordinate search for one recursion step: minimize delta(s)
// over (alpha, tau, mu, sigma) subject to validate_params. Coordinates are
// scanned in turn with full line scans over a fixed-resolution grid,
// cycling until a whole cycle brings no improvement, then re-scanned in a
// narrow window around the incumbent at 10x and 100x finer resolution.
// A fixed list of start points guards against poor local minima; the
// winning delta(s) sits in a thin valley (theta_1 driven toward zero by a
// near-exact mu cancellation), so the refinement stages matter. The scan
// order and tie-breaks are fixed, so a given config always returns the
// same point.

#pragma once

#include <vector>

#include "waring/recursion.hpp"

namespace waring {

struct CoordRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct SearchConfig {
    CoordRange alpha{-1.0, 0.999};
    CoordRange tau{0.0, 2.0};
    CoordRange mu{-3.0, 0.0};
    CoordRange sigma{0.0, 0.6};
    double resolution = 1e-4;
    unsigned max_cycles = 60;
    // Window scans around the incumbent at resolution / 10^level, for
    // level = 1 .. refine_levels, after the base-grid descent converges.
    unsigned refine_levels = 2;
    // Also start from the stored reference rows for (k, s) and from the
    // nearest earlier stored row of the same k, when they exist. These
    // seeds make a default search never lose to the stored tables, and
    // give chain continuations a warm start.
    bool seed_stored_rows = true;
    // Start points are clamped into the bounds and evaluated exactly as
    // given before the grid descent takes over.
    std::vector<StepParams> starts = default_starts();

    static std::vector<StepParams> default_starts();
};

struct StepResult {
    StepParams params;
    double theta = 0.0;
    double delta = 0.0;
};

// Ties on delta break toward smaller |theta|, then lexicographically
// smaller (alpha, tau, mu, sigma). delta_prev must be positive; an empty
// feasible set raises InfeasibleError.
StepResult optimize_step(unsigned k, unsigned s, double delta_prev,
                         const SearchConfig& config = {});

} // namespace waring
