#include "waring/trend.hpp"

namespace waring {

TrendResult trend_analysis(std::span<const TrendPoint> points,
                           std::uint32_t nu) {
    if (points.size() < 2)
        throw ArgumentError("trend: need at least two points");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].d <= points[i - 1].d)
            throw ArgumentError("trend: d values must strictly ascend");
    }

    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].missing <= points[i - 1].missing) increasing = false;
        if (points[i].missing >= points[i - 1].missing) decreasing = false;
    }

    TrendResult res;
    res.nu = nu;
    if (increasing) {
        res.verdict = TrendVerdict::suggests_exact_value;
        res.reading =
            "heuristic: residual counts grow with d, consistent with the "
            "interval value " + std::to_string(nu) +
            " persisting as the exact value; not a proof";
    } else if (decreasing) {
        res.verdict = TrendVerdict::suggests_interval_bound;
        res.reading =
            "heuristic: residual counts shrink with d, consistent with the "
            "interval value " + std::to_string(nu) +
            " eventually dropping; treat it as an interval bound only";
    } else {
        res.verdict = TrendVerdict::inconclusive;
        res.reading = "heuristic: residual counts are not monotone in d; "
                      "no direction can be read from this sample";
    }
    return res;
}

} // namespace waring
