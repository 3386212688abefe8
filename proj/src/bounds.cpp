#include "waring/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace waring {

namespace {

double ipow(double a, unsigned e) {
    double acc = 1.0;
    for (unsigned i = 0; i < e; ++i)
        acc *= a;
    return acc;
}

} // namespace

double zeta_threshold(unsigned k) {
    if (k <= 2)
        throw ArgumentError("zeta_threshold: k must exceed 2");
    return is_power_of_two(k) ? 4.0 * k : 1.5 * k;
}

BoundCertificate certify_bound(unsigned k, unsigned t, unsigned v,
                              double delta_t) {
    if (t < 1 || v < 1)
        throw ArgumentError("certify_bound: t and v must be at least 1");
    BoundCertificate cert;
    cert.k = k;
    cert.t = t;
    cert.v = v;
    cert.s = 2 * t + v;
    cert.delta_t = delta_t;
    cert.zeta_k = zeta_threshold(k);
    cert.s_meets_threshold = static_cast<double>(cert.s) >= cert.zeta_k;
    // An optimized recursion step can overshoot to a slightly negative
    // delta; the quantity it bounds is nonnegative, so compare against 0.
    cert.v_beats_delta = v * std::ldexp(1.0, 1 - static_cast<int>(k)) >
                         std::max(delta_t, 0.0);
    return cert;
}

std::pair<unsigned, BoundCertificate> best_bound(const DeltaTable& table) {
    if (table.delta.empty())
        throw ArgumentError("best_bound: delta table is empty");
    const double zeta = zeta_threshold(table.k);
    const double zeta_ceil = std::ceil(zeta);

    bool found = false;
    BoundCertificate best;
    for (const auto& [t, delta_t] : table.delta) {
        if (t < 1)
            throw ArgumentError("best_bound: table holds s = 0");
        // Least v with v > delta(t) * 2^(k-1); exact integrality bumps by 1.
        const double scaled =
            std::floor(delta_t * std::ldexp(1.0, static_cast<int>(table.k) - 1)) +
            1.0;
        double v_min = std::max(1.0, scaled);
        v_min = std::max(v_min, zeta_ceil - 2.0 * t);
        if (!(v_min < 4e9))
            continue; // certificate far beyond any useful bound
        const auto v = static_cast<unsigned>(v_min);
        BoundCertificate cert = certify_bound(table.k, t, v, delta_t);
        if (!cert.valid())
            continue;
        if (!found || cert.s < best.s ||
            (cert.s == best.s && cert.v < best.v)) {
            best = cert;
            found = true;
        }
    }
    if (!found)
        throw InfeasibleError("best_bound: no table entry certifies a bound");
    return {best.s, best};
}

AsymptoticReport asymptotic_bound(unsigned k) {
    if (k < 3)
        throw ArgumentError("asymptotic_bound: k must be at least 3");
    AsymptoticReport rep;
    rep.k = k;
    rep.power_of_two = is_power_of_two(k);
    rep.descent_steps = (4.0 * k / 3.0) * std::log(7.0 / 4.0);
    rep.recursion_steps = 6.0 * k * std::log(8.0 / 7.0);
    rep.u = rep.descent_steps + rep.recursion_steps;
    rep.u_per_k = rep.u / k;
    rep.g_bound = rep.power_of_two ? 4.0 * k : 2.0 * rep.u + 1.0;
    rep.g_bound_per_k = rep.g_bound / k;
    return rep;
}

double PhaseParams::delta_coeff() const {
    if (beta == 0.0)
        throw ArgumentError("phase params: beta must be nonzero");
    return (omega / beta) * (1.0 + mu_bar_zeta * (beta + 1.0) / 2.0) *
           ipow((beta - 1.0) / (2.0 * beta), k - 1);
}

namespace {

struct StepCoeffs {
    double dc = 0.0;   // delta coefficient
    double A = 0.0;    // 3 omega + (2 - beta) dc
    double B = 0.0;    // k (beta + 1) + dc + omega
    double rate = 0.0; // 1 - A / (2B)
};

StepCoeffs step_coeffs(const PhaseParams& p) {
    StepCoeffs c;
    c.dc = p.delta_coeff();
    c.A = 3.0 * p.omega + (2.0 - p.beta) * c.dc;
    c.B = p.k * (p.beta + 1.0) + c.dc + p.omega;
    if (c.B == 0.0)
        throw ArgumentError("phase params: B = k(beta+1) + delta_coeff + "
                            "omega vanishes");
    c.rate = 1.0 - c.A / (2.0 * c.B);
    return c;
}

} // namespace

double phase_step(const PhaseParams& p, double delta_prev) {
    const StepCoeffs c = step_coeffs(p);
    return delta_prev * c.rate - p.k * (p.rho() - c.dc) / (2.0 * c.B);
}

double phase_delta_closed(const PhaseParams& p, double steps) {
    const StepCoeffs c = step_coeffs(p);
    if (c.A == 0.0)
        throw ArgumentError("phase params: A = 3 omega + (2-beta) "
                            "delta_coeff vanishes");
    const double offset = p.k * (p.rho() - c.dc) / c.A;
    return (p.delta_d + offset) * std::pow(c.rate, steps) - offset;
}

double phase_step_count(const PhaseParams& p) {
    const StepCoeffs c = step_coeffs(p);
    if (c.A == 0.0)
        throw ArgumentError("phase params: A = 3 omega + (2-beta) "
                            "delta_coeff vanishes");
    const double num = p.k * (p.rho() - c.dc);
    const double den = p.delta_d * c.A + num;
    if (!(num > 0.0) || !(den > 0.0))
        throw ArgumentError("phase_step_count: log argument k(rho - delta_coeff) / "
                            "(delta_d * A + k(rho - delta_coeff)) is not "
                            "positive");
    if (!(c.rate > 0.0))
        throw ArgumentError("phase_step_count: log argument 1 - A/(2B) is not "
                            "positive");
    if (c.rate == 1.0)
        throw ArgumentError("phase_step_count: rate 1 - A/(2B) equals 1, log "
                            "denominator vanishes");
    return std::log(num / den) / std::log(c.rate);
}

double delta_bar_adjust(double delta_u, std::uint64_t u, unsigned k, double P,
                        double epsilon) {
    if (!(P > 1.0))
        throw ArgumentError("delta_bar_adjust: P must exceed 1");
    if (!(epsilon >= 0.0) || !(epsilon < 1.0))
        throw ArgumentError("delta_bar_adjust: epsilon must lie in [0, 1)");
    if (u < 1)
        throw ArgumentError("delta_bar_adjust: u must be at least 1");
    const double log_p = std::log(P);
    const double adj =
        (std::log(static_cast<double>(u)) + k * log_p) /
        ((1.0 - epsilon) * log_p);
    return delta_u - static_cast<double>(k) + adj;
}

} // namespace waring
