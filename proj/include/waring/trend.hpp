// trend.hpp
// Heuristic reading of missing-count series: how |{x in X_d : x needs more
// than nu - 1 powers}| moves as the interval index d grows.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

struct TrendPoint {
    std::uint64_t d = 0;       // interval index; series must ascend in d
    std::uint64_t missing = 0; // count at s = nu - 1
};

enum class TrendVerdict {
    suggests_interval_bound, // counts strictly decreasing: G(k;X) <= nu - 1
    suggests_exact_value,    // counts strictly increasing: G(k) = nu
    inconclusive,
};

struct TrendResult {
    TrendVerdict verdict = TrendVerdict::inconclusive;
    std::uint32_t nu = 0;
    std::string reading; // human sentence; always labeled heuristic
};

// Requires at least two points with strictly increasing d. The verdict is
// a heuristic reading of finite data, never a proof, and says so.
TrendResult trend_analysis(std::span<const TrendPoint> series,
                           std::uint32_t nu);

} // namespace waring
