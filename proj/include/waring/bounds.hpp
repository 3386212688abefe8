// bounds.hpp
// Turning finished delta tables into bounds on G(k), plus the closed-form
// large-k analysis.
//
// Threshold: zeta(k) = 4k when k is a power of two, 3k/2 otherwise.
// Certificate: s = 2t + v proves G(k) <= s when s >= zeta(k) (non-strict)
// and v * 2^(1-k) > delta(t) (strict).
//
// Large k: the descent phase costs (4k/3) ln(7/4) steps and the recursion
// phase 6k ln(8/7); with u their sum, G(k) <= 2u + 1 for k not a power of
// two and G(k) <= 4k otherwise. The recursion phase step count comes from
// a linear recurrence in delta whose closed form and logarithmic step
// count are exposed below.

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

// 4k for powers of two, 3k/2 otherwise. k > 2.
double zeta_threshold(unsigned k);

inline bool is_power_of_two(unsigned k) { return k > 0 && (k & (k - 1)) == 0; }

struct BoundCertificate {
    unsigned k = 0;
    unsigned t = 0;
    unsigned v = 0;
    unsigned s = 0;        // 2t + v
    double delta_t = 0.0;
    double zeta_k = 0.0;
    bool s_meets_threshold = false; // s >= zeta(k)
    bool v_beats_delta = false;     // v * 2^(1-k) > delta(t), strictly

    bool valid() const { return s_meets_threshold && v_beats_delta; }
};

// Checks one (t, v) pair against delta(t). t, v >= 1; k > 2.
BoundCertificate certify_bound(unsigned k, unsigned t, unsigned v,
                              double delta_t);

struct DeltaTable {
    unsigned k = 0;
    std::map<unsigned, double> delta; // s -> delta(s)
};

// Smallest certified s over all t in the table, choosing per t the least
// workable v: v = max(1, floor(delta(t) * 2^(k-1)) + 1, ceil(zeta(k)) - 2t).
// An exactly integral delta(t) * 2^(k-1) therefore gets exceeded by one.
// Ties on s prefer the smaller v. Empty table is an ArgumentError.
std::pair<unsigned, BoundCertificate> best_bound(const DeltaTable& table);

struct AsymptoticReport {
    unsigned k = 0;
    bool power_of_two = false;
    double descent_steps = 0.0;    // (4k/3) ln(7/4)
    double recursion_steps = 0.0;  // 6k ln(8/7)
    double u = 0.0;                // sum of the two
    double u_per_k = 0.0;          // 1.547343...
    double g_bound = 0.0;          // 2u + 1, or 4k for powers of two
    double g_bound_per_k = 0.0;
};

// k >= 3.
AsymptoticReport asymptotic_bound(unsigned k);

// Parameters of the recursion-phase delta recurrence:
//   1 - alpha       = beta  * delta(s-1) / k
//   1 - alpha - tau = omega * delta(s-1) / k
//   delta_coeff     = (omega/beta) (1 + mu_bar_zeta (beta+1)/2)
//                     ((beta-1)/(2 beta))^(k-1)
//   rho             = 1 + beta - omega
// One step: delta(s) = delta(s-1) (1 - A/(2B)) - k (rho - delta_coeff)/(2B)
// with A = 3 omega + (2-beta) delta_coeff, B = k (beta+1) + delta_coeff
// + omega.
struct PhaseParams {
    unsigned k = 0;
    double beta = 0.0;
    double omega = 0.0;
    double mu_bar_zeta = 0.0;
    double delta_d = 0.0; // delta at the start of the phase

    double delta_coeff() const;
    double rho() const { return 1.0 + beta - omega; }
};

// One application of the linear recurrence.
double phase_step(const PhaseParams& p, double delta_prev);

// Closed form after i steps.
double phase_delta_closed(const PhaseParams& p, double steps);

// Number of steps to drive delta_d to zero:
//   log( k(rho-dc) / (delta_d * A + k(rho-dc)) ) / log( 1 - A/(2B) ).
// A nonpositive log argument raises an ArgumentError naming the term.
double phase_step_count(const PhaseParams& p);

// delta_bar(u) = delta_u - k + log(u * P^k) / log(P^(1-epsilon)).
// P > 1, 0 <= epsilon < 1, u >= 1.
double delta_bar_adjust(double delta_u, std::uint64_t u, unsigned k, double P,
                        double epsilon);

} // namespace waring
