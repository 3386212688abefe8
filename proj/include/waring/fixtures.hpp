// fixtures.hpp
// Published reference tables, transcribed into code once so the rest of the
// project can replay, cross-check, and regression-test against them.
//
// recursion_steps: per-(k, s) step parameters with the printed theta and
//   delta (six decimals), k = 5..20, s from 3 up to the final step for
//   k = 5 and 9..20 and up to s = 8 for k = 6..8.
// final_deltas: the delta value at the final tabulated step per k.
// g_bounds: the certified upper bound F(k) on G(k), k = 5..20.
// bound_offsets: the offset v with s = 2t + v used for F(k).
// interval_g: spot checks of G(k; X) on dyadic intervals for k = 5..7.
// missing_counts: residual counts behind selected interval_g cells.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/errors.hpp"
#include "waring/recursion.hpp"
#include "waring/replay.hpp"

namespace waring::fixtures {

// One tabulated recursion step. theta and delta are the printed values.
using Row = RecursionRow;

// All recursion_steps rows, ordered by k then s.
std::span<const Row> recursion_rows();

// Rows for one k, contiguous in s. Empty span if k is absent.
std::span<const Row> recursion_rows_for(unsigned k);

// Single row lookup.
std::optional<Row> recursion_row(unsigned k, unsigned s);

struct FinalDelta {
    unsigned k;
    unsigned s;
    double delta;
};
std::span<const FinalDelta> final_deltas();

struct GBound {
    unsigned k;
    unsigned bound; // F(k)
};
std::span<const GBound> g_bounds();

struct BoundOffset {
    unsigned k;
    unsigned v;
};
std::span<const BoundOffset> bound_offsets();

struct IntervalG {
    std::uint32_t d;  // interval is [1.6d * 10^9, 3.2d * 10^9]
    unsigned k;       // 5, 6, or 7
    unsigned g;       // max over the interval of min representation length
};
// Only the printed cells; absent cells are absent here too.
std::span<const IntervalG> interval_g();
std::optional<unsigned> interval_g_cell(std::uint32_t d, unsigned k);

struct MissingCount {
    std::uint32_t d;
    std::uint64_t missing;
};
std::span<const MissingCount> missing_counts();

// Generic access for the CLI: table names are the identifiers above.
// Unknown names raise ArgumentError. Each table renders as CSV with a
// header row.
std::vector<std::string> table_names();
std::string table_csv(std::string_view name);

struct IntegrityReport {
    // ks whose recursion_steps run ends with delta <= 1e-6 (complete runs)
    std::vector<unsigned> complete;
    // ks whose run stops early (delta still large at the last row)
    std::vector<unsigned> truncated;
    // (k, s) pairs where delta fails to decrease strictly along the run
    std::vector<std::pair<unsigned, unsigned>> non_monotone;
    // ks where the last row's delta disagrees with final_deltas
    std::vector<unsigned> endpoint_mismatch;
    bool ok() const {
        return non_monotone.empty() && endpoint_mismatch.empty();
    }
};
IntegrityReport integrity_check();

// CSV round-trip for recursion_steps rows:
// header k,s,alpha,tau,mu,sigma,theta,delta; params and theta/delta all
// printed with six decimals, matching the stored values bit-for-bit after
// re-parsing.
std::string rows_to_csv(std::span<const Row> rows);
std::vector<Row> rows_from_csv(std::string_view csv);

} // namespace waring::fixtures
