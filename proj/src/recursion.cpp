#include "waring/recursion.hpp"

#include <cmath>

namespace waring {

namespace {

// a^e by repeated multiplication; e is small (at most k).
double ipow(double a, unsigned e) {
    double acc = 1.0;
    for (unsigned i = 0; i < e; ++i)
        acc *= a;
    return acc;
}

} // namespace

double delta_lambda_convert(double value, unsigned s, unsigned k,
                            GapForm direction) {
    if (s < 2)
        throw ArgumentError("gap conversion needs s >= 2");
    const double off = 2.0 * s - static_cast<double>(k);
    return direction == GapForm::delta_to_lambda ? value + off : value - off;
}

double coeff_a(unsigned k, unsigned s, double alpha, double lambda_prev) {
    if (k < 2)
        throw ArgumentError("coeff_a: k must be at least 2");
    if (s < 3)
        throw ArgumentError("coeff_a: s must be at least 3");
    const double denom = 2.0 * k * (1.0 - alpha);
    if (denom == 0.0)
        throw SingularParamError("coeff_a: alpha = 1 makes the denominator "
                                 "vanish");
    return ((2.0 * s - 2.0) - alpha * k - lambda_prev) / denom;
}

TauEta tau_eta_sequences(const StepParams& p, unsigned k) {
    if (k < 2)
        throw ArgumentError("tau_eta_sequences: k must be at least 2");
    TauEta out;
    out.tau.resize(k);
    out.eta.resize(k - 1);

    std::vector<double> pw(k); // pw[e] = sigma^e
    pw[0] = 1.0;
    for (unsigned e = 1; e < k; ++e)
        pw[e] = pw[e - 1] * p.sigma;

    out.tau[0] = p.tau;
    double geom = 0.0; // sum_{j=0}^{i-1} (2 sigma)^j, built term by term
    double term = 1.0;
    for (unsigned i = 1; i < k; ++i) {
        out.eta[i - 1] = p.tau + p.mu * pw[k - i];
        geom += term;
        out.tau[i] = p.tau - p.mu * pw[k - i] * geom;
        term *= 2.0 * p.sigma;
    }
    return out;
}

double theta_terminal(unsigned k, double alpha, double tau_k) {
    if (k < 1)
        throw ArgumentError("theta_terminal: k must be positive");
    if (1.0 - alpha == 0.0)
        throw SingularParamError("theta_terminal: alpha = 1 makes the "
                                 "denominator vanish");
    return (1.0 - alpha - tau_k) / (k * (1.0 - alpha));
}

ThetaProfile theta_profile(unsigned k, unsigned s, const StepParams& p,
                           double lambda_prev) {
    if (k < 2)
        throw ArgumentError("theta_profile: k must be at least 2");
    ThetaProfile prof;
    prof.a = coeff_a(k, s, p.alpha, lambda_prev);
    prof.seqs = tau_eta_sequences(p, k);
    prof.theta.resize(k);
    prof.theta[k - 1] = theta_terminal(k, p.alpha, prof.seqs.tau[k - 1]);
    const double denom = 2.0 * k * (1.0 - p.alpha);
    for (unsigned i = k - 1; i >= 1; --i) {
        prof.theta[i - 1] =
            prof.a * prof.theta[i] +
            (1.0 - p.alpha - prof.seqs.eta[i - 1]) / denom;
    }
    return prof;
}

double zeta_factor(double sigma, double a, unsigned k) {
    if (k < 2)
        throw ArgumentError("zeta_factor: k must be at least 2");
    if (sigma == 0.0)
        return 0.0;
    if (a == 0.0)
        throw SingularParamError("zeta_factor: a = 0 with sigma != 0");
    double z = 0.0, q = 0.0;
    double zt = 1.0, qt = 1.0;
    const double zr = 2.0 * sigma;
    const double qr = sigma / a;
    for (unsigned j = 1; j < k; ++j) {
        zt *= zr;
        qt *= qr;
        z += zt;
        q += qt;
    }
    return z - q;
}

double theta_initial(unsigned k, unsigned s, const StepParams& p,
                     double lambda_prev) {
    if (k < 2)
        throw ArgumentError("theta_initial: k must be at least 2");
    const double a = coeff_a(k, s, p.alpha, lambda_prev);
    if (a == 1.0)
        throw SingularParamError("theta_initial: a = 1 makes the closed "
                                 "form denominator vanish");
    const double c = (1.0 - p.alpha - p.tau) / (2.0 * k * (1.0 - p.alpha));
    double mu_bar_zeta = 0.0;
    if (p.mu != 0.0) {
        const double head = 1.0 - p.alpha - p.tau;
        if (head == 0.0)
            throw SingularParamError("theta_initial: mu != 0 with "
                                     "1 - alpha - tau = 0");
        mu_bar_zeta = (p.mu / head) * zeta_factor(p.sigma, a, k);
    }
    return c / (1.0 - a) +
           c * ((1.0 - 2.0 * a) / (1.0 - a) + mu_bar_zeta) * ipow(a, k - 1);
}

double delta_step(double delta_prev, double theta, double alpha, double tau,
                  unsigned k) {
    if (1.0 + theta == 0.0)
        throw SingularParamError("delta_step: theta = -1 makes the "
                                 "denominator vanish");
    return (delta_prev + (1.0 - alpha / 2.0) * (k * theta - 1.0) + tau / 2.0) /
           (1.0 + theta);
}

Validity validate_params(unsigned k, unsigned s, const StepParams& p,
                         double lambda_prev) {
    if (k < 2)
        throw ArgumentError("validate_params: k must be at least 2");
    Validity v;
    if (1.0 - p.alpha == 0.0) {
        v.reasons.push_back("alpha = 1: profile denominators vanish");
        return v;
    }
    const double a = coeff_a(k, s, p.alpha, lambda_prev);
    if (a == 1.0)
        v.reasons.push_back("a = 1: closed form denominator vanishes");
    if (p.mu != 0.0) {
        if (1.0 - p.alpha - p.tau == 0.0)
            v.reasons.push_back("mu != 0 with 1 - alpha - tau = 0: scaled "
                                "mu undefined");
        if (a == 0.0 && p.sigma != 0.0)
            v.reasons.push_back("a = 0 with sigma != 0: zeta sum undefined");
    }

    const ThetaProfile prof = theta_profile(k, s, p, lambda_prev);
    const double tau_k = prof.seqs.tau[k - 1];
    if (!(1.0 - p.alpha > tau_k))
        v.reasons.push_back("1 - alpha <= tau_k: terminal theta not "
                            "positive");
    for (unsigned i = 1; i <= k; ++i) {
        const double th = prof.theta[i - 1];
        if (!(th > 0.0)) {
            v.reasons.push_back("theta_" + std::to_string(i) +
                                " = " + std::to_string(th) +
                                " is not positive");
            break;
        }
        if (k * th > 1.0)
            v.warnings.push_back("k * theta_" + std::to_string(i) +
                                 " exceeds 1");
    }
    v.valid = v.reasons.empty();
    return v;
}

ChainResult run_chain(unsigned k, std::span<const StepParams> schedule) {
    ChainResult res;
    res.initial = chain_start(k);
    RecState state = res.initial;
    for (std::size_t idx = 0; idx < schedule.size(); ++idx) {
        const unsigned s = static_cast<unsigned>(3 + idx);
        const StepParams& p = schedule[idx];
        const std::string where = "chain step s = " + std::to_string(s) + ": ";
        try {
            const ThetaProfile prof = theta_profile(k, s, p, state.lambda);
            const double theta = prof.theta[0];
            const double delta =
                delta_step(state.delta, theta, p.alpha, p.tau, k);
            state = make_rec_state(k, s, delta);
            res.steps.push_back(ChainStep{s, p, theta, state});
        } catch (const SingularParamError& e) {
            throw SingularParamError(where + e.what());
        } catch (const ArgumentError& e) {
            throw ArgumentError(where + e.what());
        }
    }
    return res;
}

} // namespace waring
