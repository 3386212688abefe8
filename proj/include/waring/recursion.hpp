// recursion.hpp
// One step of the exponent recursion. A step at index s carries four real
// parameters (alpha, tau, mu, sigma) and maps the previous exponent gap
// delta(s-1) to delta(s) through an auxiliary profile theta_1..theta_k:
//
//   lambda_s      = delta(s) + 2s - k
//   a             = ((2s-2) - alpha*k - lambda_{s-1}) / (2k(1-alpha))
//   eta_i         = tau + mu * sigma^(k-i)              (1 <= i < k)
//   tau_1         = tau
//   tau_{i+1}     = tau - mu * sigma^(k-i) * sum_{j=0}^{i-1} (2 sigma)^j
//   theta_k       = (1/k) (1 - alpha - tau_k) / (1 - alpha)
//   theta_i       = a * theta_{i+1} + (1 - alpha - eta_i) / (2k(1-alpha))
//   delta(s)      = [delta(s-1) + (1-alpha/2)(k*theta_1 - 1) + tau/2]
//                   / (1 + theta_1)
//
// theta_initial evaluates the closed form of theta_1 directly:
//   c     = (1 - alpha - tau) / (2k(1-alpha))
//   zeta  = sum_{j=1}^{k-1} [(2 sigma)^j - (sigma/a)^j]
//   theta = c/(1-a) + c ((1-2a)/(1-a) + mu_bar * zeta) a^(k-1),
//   mu_bar = mu / (1 - alpha - tau)
//
// Geometric sums are always accumulated as explicit finite series, so the
// removable singularities at 2*sigma = 1 and sigma = a never appear. The
// chain starts from delta(2) = k - 2.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

struct StepParams {
    double alpha = 0.0;
    double tau = 0.0;
    double mu = 0.0;
    double sigma = 0.0;

    bool is_zero() const {
        return alpha == 0.0 && tau == 0.0 && mu == 0.0 && sigma == 0.0;
    }
};

struct RecState {
    unsigned k = 0;
    unsigned s = 0;
    double delta = 0.0;
    double lambda = 0.0; // always delta + 2s - k
};

inline RecState make_rec_state(unsigned k, unsigned s, double delta) {
    if (s < 2)
        throw ArgumentError("recursion state needs s >= 2");
    return RecState{k, s, delta, delta + 2.0 * s - static_cast<double>(k)};
}

inline RecState chain_start(unsigned k) {
    if (k < 3)
        throw ArgumentError("recursion chain needs k >= 3");
    return make_rec_state(k, 2, static_cast<double>(k) - 2.0);
}

enum class GapForm { delta_to_lambda, lambda_to_delta };

// delta(s) = lambda_s - 2s + k and back. s >= 2.
double delta_lambda_convert(double value, unsigned s, unsigned k,
                            GapForm direction);

// Linear coefficient of the theta recursion. alpha = 1 is singular.
double coeff_a(unsigned k, unsigned s, double alpha, double lambda_prev);

struct TauEta {
    std::vector<double> tau; // tau[i-1] = tau_i, i = 1..k
    std::vector<double> eta; // eta[i-1] = eta_i, i = 1..k-1
};

// k >= 2. Explicit finite series; exact at 2*sigma = 1.
TauEta tau_eta_sequences(const StepParams& p, unsigned k);

// theta_k. alpha = 1 is singular.
double theta_terminal(unsigned k, double alpha, double tau_k);

struct ThetaProfile {
    double a = 0.0;
    std::vector<double> theta; // theta[i-1] = theta_i, i = 1..k
    TauEta seqs;
};

// Backward recursion from theta_k down to theta_1.
ThetaProfile theta_profile(unsigned k, unsigned s, const StepParams& p,
                           double lambda_prev);

// zeta = sum_{j=1}^{k-1} [(2 sigma)^j - (sigma/a)^j]. sigma = 0 gives 0;
// a = 0 with sigma != 0 is singular.
double zeta_factor(double sigma, double a, unsigned k);

// Closed form of theta_1. Singular when a = 1, or when mu != 0 and
// 1 - alpha - tau = 0, or (through zeta) when a = 0 and sigma != 0.
double theta_initial(unsigned k, unsigned s, const StepParams& p,
                     double lambda_prev);

// delta(s) from delta(s-1) and theta_1. theta = -1 is singular.
double delta_step(double delta_prev, double theta, double alpha, double tau,
                  unsigned k);

struct Validity {
    bool valid = false;
    std::vector<std::string> reasons;  // empty iff valid
    std::vector<std::string> warnings; // e.g. k * theta_i > 1 somewhere
};

// A parameter point is usable for a step iff no formula denominator
// vanishes (1 - alpha, 1 - a, mu_bar and zeta when mu != 0), the whole
// profile stays positive, and 1 - alpha > tau_k so theta_k > 0. A profile
// entry with k * theta_i > 1 is flagged as a warning, not an error.
Validity validate_params(unsigned k, unsigned s, const StepParams& p,
                         double lambda_prev);

struct ChainStep {
    unsigned s = 0;
    StepParams params;
    double theta = 0.0;
    RecState state; // after the step
};

struct ChainResult {
    RecState initial; // s = 2, delta = k - 2
    std::vector<ChainStep> steps;

    const RecState& final_state() const {
        return steps.empty() ? initial : steps.back().state;
    }
};

// Applies the schedule entries to consecutive indices s = 3, 4, ... An
// empty schedule yields just the start state. Step failures rethrow with
// the failing s attached.
ChainResult run_chain(unsigned k, std::span<const StepParams> schedule);

} // namespace waring
