#include "waring/sieve.hpp"

#include <chrono>
#include <utility>

namespace waring {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
}

} // namespace

SieveReport compute_g_interval(unsigned k, std::uint64_t lo, std::uint64_t hi,
                               std::uint32_t s_max, const SieveOptions& opt,
                               ReachSet* final_set) {
    if (k == 0)
        throw ArgumentError("sieve: k must be positive");
    if (lo < 1 || lo > hi)
        throw ArgumentError("sieve: need 1 <= lo <= hi");
    if (s_max < 1)
        throw ArgumentError("sieve: s_max must be at least 1");

    const std::uint64_t need = sieve_memory_estimate(hi);
    if (need > opt.mem_cap_bytes)
        throw ResourceError("sieve: estimated " + std::to_string(need) +
                            " bytes exceeds memory cap of " +
                            std::to_string(opt.mem_cap_bytes));

    const auto t0 = std::chrono::steady_clock::now();
    SieveReport rep;
    rep.k = k;
    rep.lo = lo;
    rep.hi = hi;
    rep.s_max = s_max;

    PowerTable table = build_power_table(k, hi);
    ReachSet cur = init_reach(table, hi, opt.mem_cap_bytes);
    ReachSet next(hi);
    rep.peak_bytes = 2 * cur.storage_bytes() + table.bytes();

    const RoundOptions ropt{opt.threads, opt.block_words};
    for (std::uint32_t s = 1; s <= s_max; ++s) {
        const auto r0 = std::chrono::steady_clock::now();
        if (s > 1) {
            advance_round_into(cur, table, next, ropt);
            std::swap(cur, next);
        }
        RoundStat stat;
        stat.s = s;
        stat.missing = count_missing(cur, lo, hi);
        stat.elapsed_ms = ms_since(r0);
        rep.rounds.push_back(stat);
        if (stat.missing == 0) {
            rep.g = s;
            break;
        }
    }
    rep.elapsed_ms = ms_since(t0);
    if (final_set)
        *final_set = std::move(cur);
    return rep;
}

} // namespace waring
