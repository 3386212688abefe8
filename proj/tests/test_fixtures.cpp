#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "waring/fixtures.hpp"

using namespace waring;
using namespace waring::fixtures;

TEST_CASE("recursion table shape") {
    const auto rows = recursion_rows();
    CHECK(rows.size() == 271);

    const std::map<unsigned, unsigned> expected_counts = {
        {5, 6},   {6, 6},   {7, 6},   {8, 6},   {9, 12},  {10, 14},
        {11, 15}, {12, 17}, {13, 18}, {14, 20}, {15, 21}, {16, 23},
        {17, 24}, {18, 26}, {19, 28}, {20, 29},
    };
    std::map<unsigned, unsigned> counts;
    for (const Row& r : rows)
        ++counts[r.k];
    CHECK(counts == expected_counts);

    // rows are sorted by k, contiguous in s from 3 inside each k
    unsigned prev_k = 0;
    unsigned expect_s = 0;
    for (const Row& r : rows) {
        if (r.k != prev_k) {
            CHECK(r.k > prev_k);
            prev_k = r.k;
            expect_s = 3;
        }
        CHECK(r.s == expect_s);
        ++expect_s;
    }
}

TEST_CASE("recursion row lookups") {
    const auto row = recursion_row(5, 3);
    REQUIRE(row.has_value());
    CHECK(row->theta == 0.125120);
    CHECK(row->delta == 2.333618);
    CHECK(row->params.is_zero());

    const auto tuned = recursion_row(5, 5);
    REQUIRE(tuned.has_value());
    CHECK(tuned->params.alpha == 0.880);
    CHECK(tuned->params.mu == -0.056800);
    CHECK(tuned->params.sigma == 0.5003);

    CHECK(!recursion_row(5, 9).has_value());
    CHECK(!recursion_row(4, 3).has_value());
    CHECK(recursion_rows_for(21).empty());
    CHECK(recursion_rows_for(5).size() == 6);
}

TEST_CASE("per-k spans agree with the flat table") {
    const auto all = recursion_rows();
    std::size_t total = 0;
    for (unsigned k = 5; k <= 20; ++k)
        total += recursion_rows_for(k).size();
    CHECK(total == all.size());
}

TEST_CASE("final deltas and bounds tables") {
    CHECK(final_deltas().size() == 16);
    CHECK(g_bounds().size() == 16);
    CHECK(bound_offsets().size() == 16);

    const auto fb = [](unsigned k) {
        for (const auto& g : g_bounds())
            if (g.k == k)
                return g.bound;
        return 0u;
    };
    CHECK(fb(5) == 17);
    CHECK(fb(8) == 32);
    CHECK(fb(13) == 41);
    CHECK(fb(16) == 64);
    CHECK(fb(20) == 63);

    for (const auto& f : final_deltas()) {
        // the endpoint index matches the bound via s = 2t + v
        unsigned v = 0;
        for (const auto& o : bound_offsets())
            if (o.k == f.k)
                v = o.v;
        CHECK(v >= 1);
        CHECK(2 * f.s + v == fb(f.k));
    }
}

TEST_CASE("interval spot checks and missing counts") {
    CHECK(interval_g().size() == 24);
    CHECK(interval_g_cell(1, 5) == 9);
    CHECK(interval_g_cell(1, 6) == 15);
    CHECK(interval_g_cell(1, 7) == 20);
    CHECK(!interval_g_cell(5, 5).has_value());  // unprinted cell
    CHECK(!interval_g_cell(1, 8).has_value());  // k out of range

    const auto mc = missing_counts();
    REQUIRE(mc.size() == 4);
    CHECK(mc[0].d == 43);
    CHECK(mc[0].missing == 6470475034ull);
    CHECK(mc[3].d == 113);
    CHECK(mc[3].missing == 8482079778ull);
    // counts grow with d
    for (std::size_t i = 1; i < mc.size(); ++i)
        CHECK(mc[i].missing > mc[i - 1].missing);
}

TEST_CASE("integrity: complete and truncated runs") {
    const IntegrityReport rep = integrity_check();
    CHECK(rep.ok());
    CHECK(rep.non_monotone.empty());
    CHECK(rep.endpoint_mismatch.empty());

    const std::vector<unsigned> expect_complete = {5,  9,  10, 11, 12, 13, 14,
                                                   15, 16, 17, 18, 19, 20};
    const std::vector<unsigned> expect_truncated = {6, 7, 8};
    CHECK(rep.complete == expect_complete);
    CHECK(rep.truncated == expect_truncated);
}

TEST_CASE("deltas decrease strictly along every stored run") {
    for (unsigned k = 5; k <= 20; ++k) {
        const auto rows = recursion_rows_for(k);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            INFO("k = ", k, ", s = ", rows[i].s);
            CHECK(rows[i].delta < rows[i - 1].delta);
        }
    }
}

TEST_CASE("table registry") {
    const auto names = table_names();
    CHECK(names.size() == 6);
    CHECK(std::find(names.begin(), names.end(), "recursion_steps") !=
          names.end());
    CHECK(std::find(names.begin(), names.end(), "g_bounds") != names.end());

    for (const std::string& n : names) {
        const std::string csv = table_csv(n);
        CHECK(!csv.empty());
        CHECK(csv.find('\n') != std::string::npos);
        // header row plus at least one data row
        CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);
    }
    CHECK(table_csv("g_bounds").find("5,17") != std::string::npos);
    CHECK(table_csv("missing_counts").find("43,6470475034") !=
          std::string::npos);
    CHECK_THROWS_AS(table_csv("no_such_table"), ArgumentError);
}

TEST_CASE("recursion CSV round-trip is exact") {
    const auto rows = recursion_rows();
    const std::string csv = rows_to_csv(rows);
    CHECK(csv.rfind("k,s,alpha,tau,mu,sigma,theta,delta\n", 0) == 0);
    const std::vector<Row> back = rows_from_csv(csv);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].k == rows[i].k);
        CHECK(back[i].s == rows[i].s);
        // stored values carry six decimals, so the round-trip is bit-exact
        CHECK(back[i].params.alpha == rows[i].params.alpha);
        CHECK(back[i].params.tau == rows[i].params.tau);
        CHECK(back[i].params.mu == rows[i].params.mu);
        CHECK(back[i].params.sigma == rows[i].params.sigma);
        CHECK(back[i].theta == rows[i].theta);
        CHECK(back[i].delta == rows[i].delta);
    }
}

TEST_CASE("rows_from_csv rejects the wrong header") {
    CHECK_THROWS_AS(rows_from_csv("k,s,alpha\n5,3,0\n"), FormatError);
}
