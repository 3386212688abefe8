#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "waring/dump.hpp"
#include "waring/fixtures.hpp"
#include "waring/power_table.hpp"
#include "waring/reach_set.hpp"
#include "waring/sieve.hpp"
#include "waring/trend.hpp"

using namespace waring;

namespace {

std::set<std::uint64_t> members(const ReachSet& set) {
    std::set<std::uint64_t> out;
    for (std::uint64_t x = 0; x <= set.n_max(); ++x)
        if (set.test(x))
            out.insert(x);
    return out;
}

} // namespace

TEST_CASE("checked_pow") {
    CHECK(checked_pow(2, 63).value() == (std::uint64_t{1} << 63));
    CHECK(!checked_pow(2, 64).has_value());
    CHECK(checked_pow(79, 5).value() == 3077056399ull);
    CHECK(checked_pow(1, 100).value() == 1);
    CHECK(checked_pow(10, 1).value() == 10);
}

TEST_CASE("integer_kth_root") {
    CHECK(integer_kth_root(3200000000ull, 5) == 79);
    CHECK(integer_kth_root(3077056399ull, 5) == 79);
    CHECK(integer_kth_root(3077056398ull, 5) == 78);
    CHECK(integer_kth_root(UINT64_MAX, 2) == 4294967295ull);
    CHECK(integer_kth_root(UINT64_MAX, 1) == UINT64_MAX);
    CHECK(integer_kth_root(1, 7) == 1);
    CHECK(integer_kth_root(63, 6) == 1);
    CHECK(integer_kth_root(64, 6) == 2);
}

TEST_CASE("build_power_table") {
    const PowerTable t = build_power_table(5, 3200000000ull);
    CHECK(t.powers.size() == 79);
    CHECK(t.powers.front() == 1);
    CHECK(t.powers.back() == 3077056399ull);
    for (std::size_t i = 1; i < t.powers.size(); ++i)
        CHECK(t.powers[i - 1] < t.powers[i]);

    CHECK(build_power_table(1, 10).powers.size() == 10);
    CHECK(build_power_table(64, UINT64_MAX).powers.size() == 1);
    CHECK_THROWS_AS(build_power_table(0, 10), ArgumentError);
    CHECK_THROWS_AS(build_power_table(3, 0), ArgumentError);
}

TEST_CASE("dp_min_powers") {
    const auto c3 = dp_min_powers(3, 100);
    CHECK(c3[0] == 0);
    CHECK(c3[1] == 1);
    CHECK(c3[8] == 1);
    CHECK(c3[23] == 9);
    const auto c4 = dp_min_powers(4, 100);
    CHECK(c4[79] == 19);
    CHECK(c4[16] == 1);
}

TEST_CASE("reach set bit bookkeeping") {
    ReachSet set(130);
    for (std::uint64_t x : {0ull, 63ull, 64ull, 65ull, 127ull, 128ull, 130ull})
        set.set(x);
    CHECK(set.test(63));
    CHECK(set.test(64));
    CHECK(!set.test(62));
    CHECK(set.count_range(63, 65) == 3);
    CHECK(set.count_range(1, 130) == 6);
    CHECK(set.count_range(64, 64) == 1);
    CHECK(!set.all_set(63, 66));
    CHECK(set.all_set(63, 65));
    CHECK_THROWS_AS(set.test(131), ArgumentError);
    CHECK_THROWS_AS(ReachSet(0), ArgumentError);
}

TEST_CASE("init_reach seeds zero plus the powers") {
    const PowerTable t = build_power_table(3, 64);
    const ReachSet set = init_reach(t, 64);
    CHECK(members(set) == std::set<std::uint64_t>{0, 1, 8, 27, 64});
    CHECK(count_missing(set, 1, 30) == 27);
    CHECK_THROWS_AS(init_reach(t, 63), ArgumentError);
    CHECK_THROWS_AS(init_reach(t, 64, 8), ResourceError);
}

TEST_CASE("advance_round: pairwise sums of cubes up to 60") {
    const PowerTable t = build_power_table(3, 60);
    ReachSet prev(60);
    for (std::uint64_t x : {0ull, 1ull, 8ull, 27ull})
        prev.set(x);
    const ReachSet next = advance_round(prev, t);
    CHECK(members(next) ==
          std::set<std::uint64_t>{0, 1, 2, 8, 9, 16, 27, 28, 35, 54});
}

TEST_CASE("advance_round: {0} grows to the seeded powers") {
    const PowerTable t = build_power_table(4, 100);
    ReachSet prev(100);
    prev.set(0);
    const ReachSet next = advance_round(prev, t);
    CHECK(members(next) == std::set<std::uint64_t>{0, 1, 16, 81});
}

TEST_CASE("advance_round: the full set is a fixed point") {
    const PowerTable t = build_power_table(3, 200);
    ReachSet prev(200);
    for (std::uint64_t x = 0; x <= 200; ++x)
        prev.set(x);
    const ReachSet next = advance_round(prev, t);
    CHECK(next.words() == prev.words());
}

TEST_CASE("advance_round: no bit ever lands beyond n_max") {
    // n_max = 70 ends mid-word; shifted sums past 70 must be truncated
    const PowerTable t = build_power_table(3, 70);
    ReachSet cur = init_reach(t, 70);
    for (int r = 0; r < 6; ++r) {
        cur = advance_round(cur, t);
        const auto& w = cur.words();
        CHECK((w[1] >> 7) == 0); // bits 71..127
        CHECK(w[2] == 0);        // guard word
    }
}

TEST_CASE("advance_round: argument checks") {
    const PowerTable t = build_power_table(3, 100);
    ReachSet a = init_reach(t, 100);
    CHECK_THROWS_AS(advance_round_into(a, t, a), ArgumentError);
    ReachSet b(50);
    CHECK_THROWS_AS(advance_round_into(a, t, b), ArgumentError);
    ReachSet c(100);
    CHECK_THROWS_AS(advance_round_into(a, t, c, RoundOptions{0, 512}),
                    ArgumentError);
    CHECK_THROWS_AS(advance_round_into(a, t, c, RoundOptions{1, 0}),
                    ArgumentError);
}

TEST_CASE("oracle equivalence: rounds match the dynamic program") {
    // Membership after s-1 rounds means "sum of at most s powers"; that
    // must agree with the DP count for every x. Scaled-down here; the
    // acceptance run covers x <= 1e5.
    const std::uint64_t m = 4000;
    for (unsigned k : {2u, 3u, 4u, 5u}) {
        const auto c = dp_min_powers(k, m);
        const PowerTable t = build_power_table(k, m);
        ReachSet cur = init_reach(t, m);
        ReachSet next(m);
        for (std::uint32_t s = 1; s <= 12; ++s) {
            if (s > 1) {
                advance_round_into(cur, t, next);
                std::swap(cur, next);
            }
            std::uint64_t missing = 0;
            for (std::uint64_t x = 1; x <= m; ++x) {
                const bool dp_in = c[x] <= s;
                if (!dp_in)
                    ++missing;
                if (cur.test(x) != dp_in) {
                    INFO("k = ", k, " s = ", s, " x = ", x);
                    REQUIRE(cur.test(x) == dp_in);
                }
            }
            CHECK(count_missing(cur, 1, m) == missing);
        }
    }
}

TEST_CASE("saturation: squares need four rounds on [1, 10^4]") {
    const std::uint64_t m = 10000;
    const PowerTable t = build_power_table(2, m);
    ReachSet cur = init_reach(t, m);
    ReachSet next(m);
    for (int r = 0; r < 2; ++r) { // two advances: sums of <= 3 squares
        advance_round_into(cur, t, next);
        std::swap(cur, next);
    }
    CHECK(!is_saturated(cur, 1, m));
    advance_round_into(cur, t, next); // sums of <= 4 squares
    std::swap(cur, next);
    CHECK(is_saturated(cur, 1, m));
    CHECK_THROWS_AS(is_saturated(cur, 0, m), ArgumentError);
    CHECK_THROWS_AS(is_saturated(cur, 1, m + 1), ArgumentError);
}

TEST_CASE("determinism across threads, block sizes, and word widths") {
    const std::uint64_t m = 100000;
    const PowerTable t = build_power_table(3, m);

    const ReachSet base = [&] {
        ReachSet cur = init_reach(t, m);
        ReachSet nxt(m);
        for (int r = 0; r < 4; ++r) {
            advance_round_into(cur, t, nxt, RoundOptions{1, 512});
            std::swap(cur, nxt);
        }
        return cur;
    }();

    for (unsigned threads : {1u, 2u, 8u}) {
        for (std::size_t block : {std::size_t{1}, std::size_t{512},
                                  std::size_t{4096}}) {
            ReachSet cur = init_reach(t, m);
            ReachSet nxt(m);
            for (int r = 0; r < 4; ++r) {
                advance_round_into(cur, t, nxt, RoundOptions{threads, block});
                std::swap(cur, nxt);
            }
            INFO("threads = ", threads, ", block = ", block);
            CHECK(cur.words() == base.words());
        }
    }

    // 32-bit words must produce the same membership
    BasicReachSet<std::uint32_t> cur32 = init_reach<std::uint32_t>(t, m);
    BasicReachSet<std::uint32_t> nxt32(m);
    for (int r = 0; r < 4; ++r) {
        advance_round_into(cur32, t, nxt32);
        std::swap(cur32, nxt32);
    }
    for (std::uint64_t x = 0; x <= m; ++x) {
        if (cur32.test(x) != base.test(x)) {
            INFO("x = ", x);
            REQUIRE(cur32.test(x) == base.test(x));
        }
    }
}

TEST_CASE("dump: round-trip over every stored word width") {
    const PowerTable t = build_power_table(3, 300);

    auto check_roundtrip = [&](auto tag) {
        using Word = decltype(tag);
        BasicReachSet<Word> set = init_reach<Word>(t, 300);
        BasicReachSet<Word> nxt(300);
        advance_round_into(set, t, nxt);
        std::swap(set, nxt);
        std::ostringstream sink;
        serialize_reach(set, DumpMeta{3, 2}, sink);
        std::istringstream src(sink.str());
        const LoadedReach loaded = deserialize_reach(src);
        CHECK(loaded.meta.k == 3);
        CHECK(loaded.meta.s == 2);
        CHECK(loaded.stored_word_bits ==
              BasicReachSet<Word>::word_bits);
        CHECK(loaded.set.n_max() == 300);
        for (std::uint64_t x = 0; x <= 300; ++x)
            CHECK(loaded.set.test(x) == set.test(x));
    };
    check_roundtrip(std::uint8_t{});
    check_roundtrip(std::uint16_t{});
    check_roundtrip(std::uint32_t{});
    check_roundtrip(std::uint64_t{});
}

TEST_CASE("dump: round-trip after two rounds equals recomputation") {
    const std::uint64_t m = 100000;
    const PowerTable t = build_power_table(2, m);
    ReachSet cur = init_reach(t, m);
    ReachSet nxt(m);
    for (int r = 0; r < 2; ++r) {
        advance_round_into(cur, t, nxt);
        std::swap(cur, nxt);
    }
    std::ostringstream sink;
    serialize_reach(cur, DumpMeta{2, 3}, sink);
    std::istringstream src(sink.str());
    const LoadedReach loaded = deserialize_reach(src);
    CHECK(loaded.set.words() == cur.words());
}

TEST_CASE("dump: malformed streams raise format errors") {
    const PowerTable t = build_power_table(3, 64);
    const ReachSet set = init_reach(t, 64);
    std::ostringstream sink;
    serialize_reach(set, DumpMeta{3, 1}, sink);
    const std::string good = sink.str();

    auto expect_bad = [](std::string bytes) {
        std::istringstream src(bytes);
        CHECK_THROWS_AS(deserialize_reach(src), FormatError);
    };

    SUBCASE("bad magic") {
        std::string bad = good;
        bad[0] = 'X';
        expect_bad(bad);
    }
    SUBCASE("bad version") {
        std::string bad = good;
        bad[4] = 9;
        expect_bad(bad);
    }
    SUBCASE("truncated header") { expect_bad(good.substr(0, 10)); }
    SUBCASE("truncated payload") { expect_bad(good.substr(0, good.size() - 3)); }
    SUBCASE("trailing junk") { expect_bad(good + "zz"); }
    SUBCASE("stray bits beyond n_max") {
        // n_max = 64: bit 65 lives in payload byte 8
        std::string bad = good;
        bad[25 + 8] = static_cast<char>(0x02);
        expect_bad(bad);
    }
    SUBCASE("unsupported word width") {
        std::string bad = good;
        bad[21] = 7; // header W field, little-endian low byte
        expect_bad(bad);
    }
}

TEST_CASE("compute_g_interval: small closed intervals") {
    const SieveReport r2 = compute_g_interval(2, 1, 10000, 10);
    CHECK(r2.g.has_value());
    CHECK(*r2.g == 4);
    REQUIRE(r2.rounds.size() == 4);
    CHECK(r2.rounds.back().missing == 0);
    CHECK(r2.peak_bytes > 0);

    const SieveReport r3 = compute_g_interval(3, 1, 1000, 15);
    CHECK(r3.g.has_value());
    CHECK(*r3.g == 9);
    // missing counts never increase
    for (std::size_t i = 1; i < r3.rounds.size(); ++i)
        CHECK(r3.rounds[i].missing <= r3.rounds[i - 1].missing);
}

TEST_CASE("compute_g_interval: unsaturated runs keep g empty") {
    const SieveReport rep = compute_g_interval(3, 1, 1000, 3);
    CHECK(!rep.g.has_value());
    CHECK(rep.rounds.size() == 3);
    CHECK(rep.rounds.back().missing > 0);
}

TEST_CASE("compute_g_interval: hands back the final reach set") {
    ReachSet out(1);
    const SieveReport rep = compute_g_interval(3, 1, 1000, 15, {}, &out);
    REQUIRE(rep.g.has_value());
    CHECK(out.n_max() == 1000);
    CHECK(is_saturated(out, 1, 1000));
    const auto c = dp_min_powers(3, 1000);
    for (std::uint64_t x = 1; x <= 1000; ++x)
        CHECK(out.test(x) == (c[x] <= *rep.g));
}

TEST_CASE("compute_g_interval: validation and the memory cap") {
    CHECK_THROWS_AS(compute_g_interval(0, 1, 100, 5), ArgumentError);
    CHECK_THROWS_AS(compute_g_interval(3, 0, 100, 5), ArgumentError);
    CHECK_THROWS_AS(compute_g_interval(3, 200, 100, 5), ArgumentError);
    CHECK_THROWS_AS(compute_g_interval(3, 1, 100, 0), ArgumentError);
    SieveOptions opt;
    opt.mem_cap_bytes = 64;
    CHECK_THROWS_AS(compute_g_interval(3, 1, 100000, 5, opt), ResourceError);
}

TEST_CASE("trend_analysis") {
    SUBCASE("strictly increasing counts suggest the exact value") {
        const std::vector<TrendPoint> series = [] {
            std::vector<TrendPoint> out;
            for (const auto& mc : fixtures::missing_counts())
                out.push_back({mc.d, mc.missing});
            return out;
        }();
        REQUIRE(series.size() == 4);
        const TrendResult res = trend_analysis(series, 8);
        CHECK(res.verdict == TrendVerdict::suggests_exact_value);
        CHECK(res.nu == 8);
        CHECK(res.reading.find("heuristic") != std::string::npos);
        CHECK(res.reading.find("not a proof") != std::string::npos);
    }
    SUBCASE("strictly decreasing counts suggest an interval bound") {
        const std::vector<TrendPoint> series = {{1, 50}, {2, 40}, {3, 10}};
        const TrendResult res = trend_analysis(series, 8);
        CHECK(res.verdict == TrendVerdict::suggests_interval_bound);
    }
    SUBCASE("mixed counts are inconclusive") {
        const std::vector<TrendPoint> series = {{1, 50}, {2, 40}, {3, 45}};
        CHECK(trend_analysis(series, 8).verdict ==
              TrendVerdict::inconclusive);
    }
    SUBCASE("argument checks") {
        const std::vector<TrendPoint> one = {{1, 50}};
        CHECK_THROWS_AS(trend_analysis(one, 8), ArgumentError);
        const std::vector<TrendPoint> dup = {{2, 50}, {2, 40}};
        CHECK_THROWS_AS(trend_analysis(dup, 8), ArgumentError);
    }
}

TEST_CASE("memory estimate formula") {
    CHECK(sieve_memory_estimate(63) == 16);
    CHECK(sieve_memory_estimate(64) == 32);
    CHECK(sieve_memory_estimate(3200000000ull) == 2 * 50000001ull * 8);
}
