#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "waring/bounds.hpp"
#include "waring/fixtures.hpp"

using namespace waring;

namespace {

// Stored delta table for one k, completed with the separately tabulated
// endpoint value.
DeltaTable stored_table(unsigned k) {
    DeltaTable t;
    t.k = k;
    for (const auto& r : fixtures::recursion_rows_for(k))
        t.delta[r.s] = r.delta;
    for (const auto& f : fixtures::final_deltas())
        if (f.k == k)
            t.delta[f.s] = f.delta;
    return t;
}

} // namespace

TEST_CASE("zeta_threshold") {
    CHECK(zeta_threshold(8) == 32.0);
    CHECK(zeta_threshold(16) == 64.0);
    CHECK(zeta_threshold(5) == 7.5);
    CHECK(zeta_threshold(6) == 9.0);
    CHECK(zeta_threshold(20) == 30.0);
    CHECK_THROWS_AS(zeta_threshold(2), ArgumentError);
    CHECK_THROWS_AS(zeta_threshold(0), ArgumentError);
}

TEST_CASE("certify_bound verdicts") {
    SUBCASE("k = 5, t = 8, v = 1, delta = 0: valid, s = 17") {
        const BoundCertificate c = certify_bound(5, 8, 1, 0.0);
        CHECK(c.s == 17);
        CHECK(c.s_meets_threshold);
        CHECK(c.v_beats_delta);
        CHECK(c.valid());
    }
    SUBCASE("k = 8, t = 12, v = 1: s = 25 misses the threshold") {
        const BoundCertificate c = certify_bound(8, 12, 1, 0.006974);
        CHECK(c.s == 25);
        CHECK(!c.s_meets_threshold);
        CHECK(c.v_beats_delta); // 2^-7 = 0.0078125 > 0.006974
        CHECK(!c.valid());
    }
    SUBCASE("k = 8, t = 12, v = 8: s = 32 meets it non-strictly") {
        const BoundCertificate c = certify_bound(8, 12, 8, 0.006974);
        CHECK(c.s == 32);
        CHECK(c.valid());
    }
    SUBCASE("v * 2^(1-k) equal to delta is rejected (strict)") {
        const BoundCertificate c = certify_bound(3, 2, 1, 0.25);
        CHECK(c.s == 5);
        CHECK(c.s_meets_threshold);
        CHECK(!c.v_beats_delta);
        CHECK(!c.valid());
    }
    SUBCASE("argument checks") {
        CHECK_THROWS_AS(certify_bound(5, 0, 1, 0.0), ArgumentError);
        CHECK_THROWS_AS(certify_bound(5, 8, 0, 0.0), ArgumentError);
        CHECK_THROWS_AS(certify_bound(2, 8, 1, 0.0), ArgumentError);
    }
}

TEST_CASE("best_bound on stored tables") {
    SUBCASE("k = 5 certifies 17") {
        const auto [s, cert] = best_bound(stored_table(5));
        CHECK(s == 17);
        CHECK(cert.t == 8);
        CHECK(cert.v == 1);
        CHECK(cert.valid());
    }
    SUBCASE("k = 16 certifies 64 with v = 14") {
        const auto [s, cert] = best_bound(stored_table(16));
        CHECK(s == 64);
        CHECK(cert.t == 25);
        CHECK(cert.v == 14);
        CHECK(cert.valid());
    }
    SUBCASE("k = 20 certifies 63 via t = 31, v = 1") {
        const auto [s, cert] = best_bound(stored_table(20));
        CHECK(s == 63);
        CHECK(cert.t == 31);
        CHECK(cert.v == 1);
        CHECK(cert.valid());
    }
}

TEST_CASE("best_bound on hand-built tables") {
    SUBCASE("single entry with an integral threshold edge") {
        DeltaTable t;
        t.k = 3;
        t.delta[2] = 0.5;
        const auto [s, cert] = best_bound(t);
        CHECK(s == 7);
        CHECK(cert.t == 2);
        CHECK(cert.v == 3);
        CHECK(cert.valid());
    }
    SUBCASE("empty table") {
        DeltaTable t;
        t.k = 5;
        CHECK_THROWS_AS(best_bound(t), ArgumentError);
    }
    SUBCASE("deltas too large for any workable v") {
        DeltaTable t;
        t.k = 20;
        t.delta[3] = 1e12;
        CHECK_THROWS_AS(best_bound(t), InfeasibleError);
    }
    SUBCASE("t below one is rejected") {
        DeltaTable t;
        t.k = 5;
        t.delta[0] = 0.1;
        CHECK_THROWS_AS(best_bound(t), ArgumentError);
    }
}

TEST_CASE("asymptotic_bound") {
    const AsymptoticReport r100 = asymptotic_bound(100);
    CHECK(r100.descent_steps ==
          doctest::Approx(74.61543839138969).epsilon(1e-12));
    CHECK(r100.recursion_steps ==
          doctest::Approx(80.11883557471354).epsilon(1e-12));
    CHECK(r100.u == doctest::Approx(154.73427396610322).epsilon(1e-12));
    CHECK(r100.u_per_k ==
          doctest::Approx(1.5473427396610322).epsilon(1e-12));
    CHECK(!r100.power_of_two);
    CHECK(r100.g_bound ==
          doctest::Approx(310.46854793220643).epsilon(1e-12));

    const AsymptoticReport r8 = asymptotic_bound(8);
    CHECK(r8.power_of_two);
    CHECK(r8.g_bound == 32.0);
    CHECK(asymptotic_bound(16).g_bound == 64.0);

    // both step counts are linear in k
    const AsymptoticReport a = asymptotic_bound(50);
    const AsymptoticReport b = asymptotic_bound(100);
    CHECK(b.descent_steps ==
          doctest::Approx(2.0 * a.descent_steps).epsilon(1e-12));
    CHECK(b.recursion_steps ==
          doctest::Approx(2.0 * a.recursion_steps).epsilon(1e-12));

    CHECK_THROWS_AS(asymptotic_bound(2), ArgumentError);
}

TEST_CASE("phase_step_count: closed form tracks the iterated recurrence") {
    PhaseParams p;
    p.k = 10;
    p.beta = 0.9;
    p.omega = 0.5;
    p.mu_bar_zeta = 0.1;
    p.delta_d = 1.0;

    double delta = p.delta_d;
    for (unsigned i = 1; i <= 50; ++i) {
        delta = phase_step(p, delta);
        const double closed = phase_delta_closed(p, i);
        CHECK(std::abs(delta - closed) <=
              1e-9 * std::max(1.0, std::abs(delta)));
    }
}

TEST_CASE("phase_step_count: frozen value and edge cases") {
    PhaseParams p;
    p.k = 10;
    p.beta = 0.9;
    p.omega = 0.5;
    p.mu_bar_zeta = 0.1;
    p.delta_d = 1.0;
    CHECK(phase_step_count(p) == doctest::Approx(2.5951260476051385).epsilon(1e-12));

    p.delta_d = 0.0;
    CHECK(phase_step_count(p) == doctest::Approx(0.0));

    SUBCASE("omega = 0 kills the step denominator") {
        p.omega = 0.0;
        p.delta_d = 1.0;
        CHECK_THROWS_AS(phase_step_count(p), ArgumentError);
    }
    SUBCASE("beta = 0 is rejected in delta_coeff") {
        p.beta = 0.0;
        CHECK_THROWS_AS(p.delta_coeff(), ArgumentError);
    }
    SUBCASE("a nonpositive log argument is named") {
        p.delta_d = -20.0; // drives the denominator of the log argument <= 0
        CHECK_THROWS_AS(phase_step_count(p), ArgumentError);
    }
}

TEST_CASE("phase_step_count: large even k with the limit parameters") {
    // beta = omega = 1/3, mu_bar_zeta = -1, delta_d = 3k/7: the step count
    // approaches 6k ln(8/7) for large even k.
    PhaseParams p;
    p.k = 10000;
    p.beta = 1.0 / 3.0;
    p.omega = 1.0 / 3.0;
    p.mu_bar_zeta = -1.0;
    p.delta_d = 3.0 * p.k / 7.0;
    const double steps = phase_step_count(p);
    const double limit = 6.0 * p.k * std::log(8.0 / 7.0);
    CHECK(std::abs(steps - limit) <= 0.01 * limit);
}

TEST_CASE("delta_bar_adjust") {
    CHECK(delta_bar_adjust(0.0, 1, 4, 7.0, 0.0) == doctest::Approx(0.0));
    CHECK(delta_bar_adjust(1.0, 3, 4, 10.0, 0.0) ==
          doctest::Approx(1.0 + std::log(3.0) / std::log(10.0))
              .epsilon(1e-14));
    CHECK(delta_bar_adjust(2.0, 5, 3, 10.0, 0.1) ==
          doctest::Approx(3.1099666714844654).epsilon(1e-13));
    // for large P the adjustment tends to delta - k + k/(1 - epsilon)
    CHECK(delta_bar_adjust(0.5, 2, 6, 1e12, 0.25) ==
          doctest::Approx(2.533447777295997).epsilon(1e-12));
    CHECK(std::abs(delta_bar_adjust(0.5, 2, 6, 1e12, 0.25) - 2.5) < 0.05);

    CHECK_THROWS_AS(delta_bar_adjust(0.0, 1, 4, 1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(delta_bar_adjust(0.0, 1, 4, 10.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(delta_bar_adjust(0.0, 0, 4, 10.0, 0.0), ArgumentError);
}

TEST_CASE("stored bound certificates are self-verifying") {
    // re-checking each best_bound winner through certify_bound must agree
    for (const auto& gb : fixtures::g_bounds()) {
        const auto [s, cert] = best_bound(stored_table(gb.k));
        const BoundCertificate again =
            certify_bound(cert.k, cert.t, cert.v, cert.delta_t);
        CHECK(again.valid() == cert.valid());
        CHECK(again.s == cert.s);
        CHECK(s == cert.s);
    }
}
