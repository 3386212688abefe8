// replay.hpp
// Re-derives theta and delta for published recursion rows and reports the
// deviation from the printed values. Row-local mode feeds every step the
// printed previous delta, so one bad row cannot poison the rest; chained
// mode feeds each step the recomputed delta instead.

#pragma once

#include <span>
#include <vector>

#include "waring/recursion.hpp"

namespace waring {

struct RecursionRow {
    unsigned k = 0;
    unsigned s = 0;
    StepParams params;
    double theta = 0.0; // printed
    double delta = 0.0; // printed
};

struct RowDeviation {
    unsigned k = 0;
    unsigned s = 0;
    double theta_computed = 0.0;
    double delta_computed = 0.0;
    double theta_dev = 0.0; // |computed - printed|
    double delta_dev = 0.0;
    bool zero_params = false;
};

struct GroupDeviation {
    unsigned k = 0;
    unsigned rows = 0;
    double max_theta_dev = 0.0;
    double mean_theta_dev = 0.0;
    double max_delta_dev = 0.0;
    double mean_delta_dev = 0.0;
    double final_delta_computed = 0.0;
};

struct ReplayReport {
    bool chained = false;
    double theta_tol = 0.0;
    double delta_tol = 0.0;
    std::vector<RowDeviation> rows;
    std::vector<GroupDeviation> groups;
    std::vector<RowDeviation> violations; // rows exceeding a tolerance
    RowDeviation worst_theta;
    RowDeviation worst_delta;

    bool ok() const { return violations.empty(); }
};

// Rows must be grouped by k with contiguous s starting at 3 inside each
// group; anything else is a FixtureError.
ReplayReport replay_table(std::span<const RecursionRow> rows,
                          double theta_tol = 1e-4, double delta_tol = 1e-3,
                          bool chained = false);

} // namespace waring
