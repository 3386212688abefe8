#include "waring/replay.hpp"

#include <cmath>
#include <map>

namespace waring {

ReplayReport replay_table(std::span<const RecursionRow> rows, double theta_tol,
                          double delta_tol, bool chained) {
    ReplayReport rep;
    rep.chained = chained;
    rep.theta_tol = theta_tol;
    rep.delta_tol = delta_tol;
    if (rows.empty())
        return rep;

    // Group layout check: one run per k, contiguous s from 3.
    std::vector<std::pair<unsigned, std::pair<std::size_t, std::size_t>>> spans;
    for (std::size_t i = 0; i < rows.size();) {
        const unsigned k = rows[i].k;
        for (const auto& sp : spans) {
            if (sp.first == k)
                throw FixtureError("replay: rows for k = " +
                                   std::to_string(k) + " are not contiguous");
        }
        if (rows[i].s != 3)
            throw FixtureError("replay: k = " + std::to_string(k) +
                               " must start at s = 3, got s = " +
                               std::to_string(rows[i].s));
        std::size_t j = i + 1;
        while (j < rows.size() && rows[j].k == k) {
            if (rows[j].s != rows[j - 1].s + 1)
                throw FixtureError("replay: k = " + std::to_string(k) +
                                   " skips from s = " +
                                   std::to_string(rows[j - 1].s) + " to s = " +
                                   std::to_string(rows[j].s));
            ++j;
        }
        spans.emplace_back(k, std::make_pair(i, j));
        i = j;
    }

    for (const auto& [k, span_ij] : spans) {
        const auto [i0, i1] = span_ij;
        GroupDeviation grp;
        grp.k = k;
        grp.rows = static_cast<unsigned>(i1 - i0);
        double sum_theta = 0.0, sum_delta = 0.0;

        RecState state = chain_start(k);
        for (std::size_t i = i0; i < i1; ++i) {
            const RecursionRow& row = rows[i];
            const double lambda_prev = state.lambda;
            const double delta_prev = state.delta;

            const ThetaProfile prof =
                theta_profile(k, row.s, row.params, lambda_prev);
            const double theta = prof.theta[0];
            const double delta =
                delta_step(delta_prev, theta, row.params.alpha,
                           row.params.tau, k);

            RowDeviation dev;
            dev.k = k;
            dev.s = row.s;
            dev.theta_computed = theta;
            dev.delta_computed = delta;
            dev.theta_dev = std::fabs(theta - row.theta);
            dev.delta_dev = std::fabs(delta - row.delta);
            dev.zero_params = row.params.is_zero();
            rep.rows.push_back(dev);

            sum_theta += dev.theta_dev;
            sum_delta += dev.delta_dev;
            grp.max_theta_dev = std::max(grp.max_theta_dev, dev.theta_dev);
            grp.max_delta_dev = std::max(grp.max_delta_dev, dev.delta_dev);
            if (dev.theta_dev > theta_tol || dev.delta_dev > delta_tol)
                rep.violations.push_back(dev);
            if (rep.rows.size() == 1 ||
                dev.theta_dev > rep.worst_theta.theta_dev)
                rep.worst_theta = dev;
            if (rep.rows.size() == 1 ||
                dev.delta_dev > rep.worst_delta.delta_dev)
                rep.worst_delta = dev;

            // Chained mode carries the recomputed delta forward; row-local
            // mode resets to the printed value.
            state = make_rec_state(k, row.s, chained ? delta : row.delta);
            grp.final_delta_computed = delta;
        }
        grp.mean_theta_dev = sum_theta / grp.rows;
        grp.mean_delta_dev = sum_delta / grp.rows;
        rep.groups.push_back(grp);
    }
    return rep;
}

} // namespace waring
