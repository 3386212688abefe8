// report.hpp
// Serializers for tool output. JSON is emitted by hand: the field set is
// small and fixed, and hand emission keeps key order stable so --stable
// runs are byte-identical.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "waring/recursion.hpp"
#include "waring/replay.hpp"
#include "waring/sieve.hpp"

namespace waring {

// {"k":..,"lo":..,"hi":..,"s_max":..,"g":int|null,
//  "rounds":[{"s":..,"missing":..},...],"elapsed_ms":..,"peak_bytes":..}
// stable zeroes elapsed_ms.
std::string sieve_report_json(const SieveReport& rep, bool stable);
std::string sieve_report_csv(const SieveReport& rep);
std::string sieve_report_text(const SieveReport& rep);

struct RecurReportRow {
    unsigned s = 0;
    StepParams params;
    double theta = 0.0;
    double delta = 0.0;
};

struct RecurReport {
    unsigned k = 0;
    std::vector<RecurReportRow> rows;
};

// {"k":..,"rows":[{"s":..,"alpha":..,"tau":..,"mu":..,"sigma":..,
//  "theta":..,"delta":..},...]}
// Params print with six decimals, theta and delta at full precision.
std::string recur_report_json(const RecurReport& rep);
std::string recur_report_csv(const RecurReport& rep);
std::string recur_report_text(const RecurReport& rep);

std::string replay_report_text(const ReplayReport& rep);

// Shared numeric formatting. fixed6 is snprintf %.6f; shortest round-trips
// a double through the minimal digits that parse back exactly.
std::string fixed6(double v);
std::string shortest_double(double v);
std::string json_escape(std::string_view s);

} // namespace waring
