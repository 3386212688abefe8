// sieve.hpp
// Bit-parallel reachability rounds for sums of k-th powers. One round turns
// the set S into S | (S << p) for every table power p, so membership after
// round r (counting the seeded set as r = 0) is "sum of at most r+1 powers".
//
// A round never reads its own output: the source set is an immutable
// snapshot and the destination is a separate buffer seeded with a copy of
// the source. Workers partition the destination word range on block
// boundaries, so every destination word has exactly one writer and the
// result is bit-identical for any thread count, block size, or word width.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "waring/errors.hpp"
#include "waring/power_table.hpp"
#include "waring/reach_set.hpp"

namespace waring {

inline constexpr std::uint64_t default_mem_cap = std::uint64_t{4} << 30;
inline constexpr std::size_t default_block_words = 512;

struct RoundOptions {
    unsigned threads = 1;
    std::size_t block_words = default_block_words;
};

// Estimated working-set bytes for a double-buffered run over [0, hi] with
// words of `word_bits` bits: 2 * ceil((hi + 1) / W) * (W / 8).
inline std::uint64_t sieve_memory_estimate(std::uint64_t hi,
                                           unsigned word_bits = 64) {
    const std::uint64_t words = (hi + 1 + word_bits - 1) / word_bits;
    return 2 * words * (word_bits / 8);
}

// ----------------------------------------------------------------------
// seeding
// ----------------------------------------------------------------------

// {0} plus every table power. n_max must match the table's range.
template <class Word = std::uint64_t>
BasicReachSet<Word> init_reach(const PowerTable& table, std::uint64_t n_max,
                               std::uint64_t mem_cap = default_mem_cap) {
    if (n_max < 1 || n_max != table.n_max)
        throw ArgumentError("init_reach: n_max must match the power table");
    const std::uint64_t need =
        (n_max / BasicReachSet<Word>::word_bits + 2) * sizeof(Word);
    if (need > mem_cap)
        throw ResourceError("init_reach: buffer of " + std::to_string(need) +
                            " bytes exceeds memory cap of " +
                            std::to_string(mem_cap));
    BasicReachSet<Word> set(n_max);
    set.set(0);
    for (std::uint64_t p : table.powers)
        set.set(p);
    return set;
}

// ----------------------------------------------------------------------
// shifted-OR kernel
// ----------------------------------------------------------------------

// dst[d] |= bits of (src << shift) for destination words d in [d_lo, d_hi).
// The two-word funnel reads src[d - woff] and src[d - woff - 1]; the word
// below the span start contributes its high bits, so no guard is needed.
template <class Word>
void or_shifted_words(const std::vector<Word>& src, std::vector<Word>& dst,
                      std::uint64_t shift, std::size_t d_lo, std::size_t d_hi) {
    constexpr unsigned W = BasicReachSet<Word>::word_bits;
    const std::size_t woff = static_cast<std::size_t>(shift / W);
    const unsigned boff = static_cast<unsigned>(shift % W);
    std::size_t d = std::max(d_lo, woff);
    if (boff == 0) {
        for (; d < d_hi; ++d)
            dst[d] |= src[d - woff];
        return;
    }
    const unsigned inv = W - boff;
    if (d < d_hi && d == woff) {
        dst[d] |= static_cast<Word>(src[0] << boff);
        ++d;
    }
    for (; d < d_hi; ++d) {
        const std::size_t s = d - woff;
        dst[d] |= static_cast<Word>(src[s] << boff) |
                  static_cast<Word>(src[s - 1] >> inv);
    }
}

namespace detail {

// Per-block "any source word nonzero" summary, used to skip shifted-OR work
// against all-zero source spans. Skipping cannot change results: OR with
// zero is the identity.
template <class Word>
std::vector<unsigned char> block_summaries(const std::vector<Word>& words,
                                           std::size_t payload_words,
                                           std::size_t block_words) {
    const std::size_t blocks = (payload_words + block_words - 1) / block_words;
    std::vector<unsigned char> summary(blocks, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t lo = b * block_words;
        const std::size_t hi = std::min(payload_words, lo + block_words);
        for (std::size_t w = lo; w < hi; ++w) {
            if (words[w] != Word{0}) {
                summary[b] = 1;
                break;
            }
        }
    }
    return summary;
}

template <class Word>
void run_blocks(const std::vector<Word>& src, std::vector<Word>& dst,
                const PowerTable& table,
                const std::vector<unsigned char>& summary,
                std::size_t payload_words, std::size_t block_words,
                std::size_t blk_lo, std::size_t blk_hi) {
    constexpr unsigned W = BasicReachSet<Word>::word_bits;
    for (std::size_t b = blk_lo; b < blk_hi; ++b) {
        const std::size_t d_lo = b * block_words;
        const std::size_t d_hi = std::min(payload_words, d_lo + block_words);
        for (std::uint64_t p : table.powers) {
            const std::size_t woff = static_cast<std::size_t>(p / W);
            if (woff >= d_hi)
                break; // powers ascend, later offsets only grow
            const std::size_t lo = std::max(d_lo, woff);
            const unsigned boff = static_cast<unsigned>(p % W);
            std::size_t s_begin = lo - woff;
            if (boff != 0 && s_begin > 0)
                --s_begin; // funnel also reads the word below the span
            const std::size_t s_end = d_hi - woff;
            bool any = false;
            for (std::size_t sb = s_begin / block_words;
                 sb <= (s_end - 1) / block_words; ++sb) {
                if (summary[sb]) {
                    any = true;
                    break;
                }
            }
            if (any)
                or_shifted_words(src, dst, p, lo, d_hi);
        }
    }
}

} // namespace detail

// One reachability round: dst := src | union over table powers p of
// (src << p), truncated to [0, n_max]. src and dst must be distinct
// objects over the same range.
template <class Word>
void advance_round_into(const BasicReachSet<Word>& src, const PowerTable& table,
                        BasicReachSet<Word>& dst, const RoundOptions& opt = {}) {
    if (&src == &dst)
        throw ArgumentError("advance_round: source and destination must be "
                            "distinct buffers");
    if (src.n_max() != dst.n_max() || src.n_max() != table.n_max)
        throw ArgumentError("advance_round: range mismatch");
    if (opt.threads < 1 || opt.block_words < 1)
        throw ArgumentError("advance_round: threads and block words must be "
                            "at least 1");

    dst.words() = src.words();
    const std::size_t payload = src.word_count();
    const std::size_t block = opt.block_words;
    const auto summary =
        detail::block_summaries(src.words(), payload, block);
    const std::size_t blocks = (payload + block - 1) / block;

    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(opt.threads, blocks));
    if (workers <= 1) {
        detail::run_blocks(src.words(), dst.words(), table, summary, payload,
                           block, 0, blocks);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            const std::size_t blk_lo = blocks * t / workers;
            const std::size_t blk_hi = blocks * (t + 1) / workers;
            pool.emplace_back([&, blk_lo, blk_hi] {
                detail::run_blocks(src.words(), dst.words(), table, summary,
                                   payload, block, blk_lo, blk_hi);
            });
        }
        for (auto& th : pool)
            th.join();
    }
    dst.clear_tail();
}

template <class Word>
BasicReachSet<Word> advance_round(const BasicReachSet<Word>& src,
                                  const PowerTable& table,
                                  const RoundOptions& opt = {}) {
    BasicReachSet<Word> dst(src.n_max());
    advance_round_into(src, table, dst, opt);
    return dst;
}

// ----------------------------------------------------------------------
// range queries (inclusive interval, 1 <= lo <= hi <= n_max)
// ----------------------------------------------------------------------

template <class Word>
bool is_saturated(const BasicReachSet<Word>& set, std::uint64_t lo,
                  std::uint64_t hi) {
    if (lo < 1 || lo > hi || hi > set.n_max())
        throw ArgumentError("is_saturated: need 1 <= lo <= hi <= n_max");
    return set.all_set(lo, hi);
}

template <class Word>
std::uint64_t count_missing(const BasicReachSet<Word>& set, std::uint64_t lo,
                            std::uint64_t hi) {
    if (lo < 1 || lo > hi || hi > set.n_max())
        throw ArgumentError("count_missing: need 1 <= lo <= hi <= n_max");
    return (hi - lo + 1) - set.count_range(lo, hi);
}

// ----------------------------------------------------------------------
// full interval run
// ----------------------------------------------------------------------

struct SieveOptions {
    unsigned threads = 1;
    std::size_t block_words = default_block_words;
    std::uint64_t mem_cap_bytes = default_mem_cap;
};

struct RoundStat {
    std::uint32_t s = 0;          // membership means "sum of <= s powers"
    std::uint64_t missing = 0;    // integers of [lo, hi] not yet reachable
    double elapsed_ms = 0.0;
};

struct SieveReport {
    unsigned k = 0;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint32_t s_max = 0;
    std::optional<std::uint32_t> g; // least s saturating [lo, hi], if reached
    std::vector<RoundStat> rounds;
    double elapsed_ms = 0.0;
    std::uint64_t peak_bytes = 0;
};

// Least s <= s_max such that every integer of [lo, hi] is a sum of at most
// s k-th powers, together with the per-round missing counts. The report's
// g stays empty when s_max rounds do not saturate the interval. A non-null
// final_set receives the reach set after the last round run.
SieveReport compute_g_interval(unsigned k, std::uint64_t lo, std::uint64_t hi,
                               std::uint32_t s_max = 64,
                               const SieveOptions& opt = {},
                               ReachSet* final_set = nullptr);

} // namespace waring
