#include "waring/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace waring {

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string shortest_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x",
                              static_cast<unsigned>(ch));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string sieve_report_json(const SieveReport& rep, bool stable) {
    std::string out = "{";
    out += "\"k\":" + std::to_string(rep.k);
    out += ",\"lo\":" + std::to_string(rep.lo);
    out += ",\"hi\":" + std::to_string(rep.hi);
    out += ",\"s_max\":" + std::to_string(rep.s_max);
    out += ",\"g\":";
    out += rep.g ? std::to_string(*rep.g) : "null";
    out += ",\"rounds\":[";
    for (std::size_t i = 0; i < rep.rounds.size(); ++i) {
        if (i)
            out += ",";
        out += "{\"s\":" + std::to_string(rep.rounds[i].s) +
               ",\"missing\":" + std::to_string(rep.rounds[i].missing) + "}";
    }
    out += "],\"elapsed_ms\":" +
           shortest_double(stable ? 0.0 : rep.elapsed_ms);
    out += ",\"peak_bytes\":" + std::to_string(rep.peak_bytes);
    out += "}\n";
    return out;
}

std::string sieve_report_csv(const SieveReport& rep) {
    std::string out = "s,missing\n";
    for (const RoundStat& r : rep.rounds)
        out += std::to_string(r.s) + "," + std::to_string(r.missing) + "\n";
    return out;
}

std::string sieve_report_text(const SieveReport& rep) {
    std::string out = "k = " + std::to_string(rep.k) + ", interval [" +
                      std::to_string(rep.lo) + ", " + std::to_string(rep.hi) +
                      "], round cap " + std::to_string(rep.s_max) + "\n";
    for (const RoundStat& r : rep.rounds)
        out += "  s = " + std::to_string(r.s) + ": missing " +
               std::to_string(r.missing) + "\n";
    if (rep.g)
        out += "interval saturated: every element is a sum of at most " +
               std::to_string(*rep.g) + " powers\n";
    else
        out += "interval not saturated within the round cap\n";
    return out;
}

std::string recur_report_json(const RecurReport& rep) {
    std::string out = "{\"k\":" + std::to_string(rep.k) + ",\"rows\":[";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const RecurReportRow& r = rep.rows[i];
        if (i)
            out += ",";
        out += "{\"s\":" + std::to_string(r.s);
        out += ",\"alpha\":" + fixed6(r.params.alpha);
        out += ",\"tau\":" + fixed6(r.params.tau);
        out += ",\"mu\":" + fixed6(r.params.mu);
        out += ",\"sigma\":" + fixed6(r.params.sigma);
        out += ",\"theta\":" + shortest_double(r.theta);
        out += ",\"delta\":" + shortest_double(r.delta);
        out += "}";
    }
    out += "]}\n";
    return out;
}

std::string recur_report_csv(const RecurReport& rep) {
    std::string out = "k,s,alpha,tau,mu,sigma,theta,delta\n";
    for (const RecurReportRow& r : rep.rows) {
        out += std::to_string(rep.k) + "," + std::to_string(r.s) + "," +
               fixed6(r.params.alpha) + "," + fixed6(r.params.tau) + "," +
               fixed6(r.params.mu) + "," + fixed6(r.params.sigma) + "," +
               fixed6(r.theta) + "," + fixed6(r.delta) + "\n";
    }
    return out;
}

std::string recur_report_text(const RecurReport& rep) {
    std::string out = "k = " + std::to_string(rep.k) + "\n";
    for (const RecurReportRow& r : rep.rows) {
        out += "  s = " + std::to_string(r.s) + ": alpha " +
               fixed6(r.params.alpha) + ", tau " + fixed6(r.params.tau) +
               ", mu " + fixed6(r.params.mu) + ", sigma " +
               fixed6(r.params.sigma) + ", theta " + fixed6(r.theta) +
               ", delta " + fixed6(r.delta) + "\n";
    }
    return out;
}

std::string replay_report_text(const ReplayReport& rep) {
    std::string out = rep.chained ? "replay (chained deltas)\n"
                                  : "replay (row-local deltas)\n";
    for (const GroupDeviation& g : rep.groups) {
        out += "  k = " + std::to_string(g.k) + ": " +
               std::to_string(g.rows) + " rows, max |dtheta| " +
               shortest_double(g.max_theta_dev) + ", max |ddelta| " +
               shortest_double(g.max_delta_dev) + ", final delta " +
               shortest_double(g.final_delta_computed) + "\n";
    }
    if (rep.violations.empty()) {
        out += "all rows within theta tolerance " +
               shortest_double(rep.theta_tol) + " and delta tolerance " +
               shortest_double(rep.delta_tol) + "\n";
    } else {
        out += std::to_string(rep.violations.size()) +
               " rows exceed tolerance:\n";
        for (const RowDeviation& v : rep.violations)
            out += "  k = " + std::to_string(v.k) + ", s = " +
                   std::to_string(v.s) + ": |dtheta| " +
                   shortest_double(v.theta_dev) + ", |ddelta| " +
                   shortest_double(v.delta_dev) + "\n";
    }
    return out;
}

} // namespace waring
