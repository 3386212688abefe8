// csv.hpp
// Small CSV layer for the two schemas the tools exchange.
//
// params:       k,s,alpha,tau,mu,sigma            (fixture files may carry
//               the wider k,s,alpha,tau,mu,sigma,theta,delta layout; the
//               extra columns are accepted and ignored here)
// delta table:  k,s,delta  or a recur JSON report ({"k":..,"rows":[..]})

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "waring/bounds.hpp"
#include "waring/errors.hpp"
#include "waring/recursion.hpp"

namespace waring {

struct ParamRow {
    unsigned k = 0;
    unsigned s = 0;
    StepParams params;
};

// Parses the params schema. Requires a header, tolerates blank lines and
// trailing theta/delta columns. Malformed input raises FormatError with
// the offending line number.
std::vector<ParamRow> parse_params_csv(std::string_view text);

std::string params_to_csv(const std::vector<ParamRow>& rows);

// Accepts either k,s,delta CSV or the recur command's JSON report.
// All rows must share one k.
DeltaTable parse_delta_table(std::string_view text);

// Splits one CSV record; no quoting, fields are numeric.
std::vector<std::string_view> split_csv_line(std::string_view line);

// Strict numeric field parsers; raise FormatError mentioning `where`.
double parse_double_field(std::string_view field, std::string_view where);
std::uint64_t parse_uint_field(std::string_view field, std::string_view where);

} // namespace waring
