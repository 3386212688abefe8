#include "waring/csv.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>

namespace waring {

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    for (auto& f : fields) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t'))
            f.remove_prefix(1);
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t'))
            f.remove_suffix(1);
    }
    return fields;
}

double parse_double_field(std::string_view field, std::string_view where) {
    if (field.empty())
        throw FormatError(std::string(where) + ": empty numeric field");
    std::string buf(field);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || errno == ERANGE)
        throw FormatError(std::string(where) + ": bad number '" + buf + "'");
    return v;
}

std::uint64_t parse_uint_field(std::string_view field, std::string_view where) {
    if (field.empty())
        throw FormatError(std::string(where) + ": empty integer field");
    std::string buf(field);
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno == ERANGE ||
        buf.front() == '-')
        throw FormatError(std::string(where) + ": bad integer '" + buf + "'");
    return v;
}

namespace {

// Iterates lines, skipping blanks, tracking 1-based numbers.
struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    bool next(std::string_view& line) {
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            std::string_view raw = text.substr(
                pos,
                nl == std::string_view::npos ? text.size() - pos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            if (!raw.empty() && raw.back() == '\r')
                raw.remove_suffix(1);
            if (raw.empty())
                continue;
            line = raw;
            return true;
        }
        return false;
    }
};

} // namespace

std::vector<ParamRow> parse_params_csv(std::string_view text) {
    LineCursor cur{text};
    std::string_view line;
    if (!cur.next(line))
        throw FormatError("params csv: empty input");
    const auto header = split_csv_line(line);
    const bool six = header.size() == 6;
    const bool eight = header.size() == 8;
    if ((!six && !eight) || header[0] != "k" || header[1] != "s" ||
        header[2] != "alpha" || header[3] != "tau" || header[4] != "mu" ||
        header[5] != "sigma" ||
        (eight && (header[6] != "theta" || header[7] != "delta")))
        throw FormatError("params csv: header must be k,s,alpha,tau,mu,sigma "
                          "with optional theta,delta columns");
    std::vector<ParamRow> rows;
    while (cur.next(line)) {
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw FormatError("params csv line " +
                              std::to_string(cur.line_no) + ": expected " +
                              std::to_string(header.size()) +
                              " fields, got " +
                              std::to_string(fields.size()));
        const std::string where =
            "params csv line " + std::to_string(cur.line_no);
        ParamRow row;
        row.k = static_cast<unsigned>(parse_uint_field(fields[0], where));
        row.s = static_cast<unsigned>(parse_uint_field(fields[1], where));
        row.params.alpha = parse_double_field(fields[2], where);
        row.params.tau = parse_double_field(fields[3], where);
        row.params.mu = parse_double_field(fields[4], where);
        row.params.sigma = parse_double_field(fields[5], where);
        if (eight) {
            parse_double_field(fields[6], where);
            parse_double_field(fields[7], where);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string params_to_csv(const std::vector<ParamRow>& rows) {
    std::string out = "k,s,alpha,tau,mu,sigma\n";
    char buf[160];
    for (const ParamRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%u,%u,%.6f,%.6f,%.6f,%.6f\n", r.k,
                      r.s, r.params.alpha, r.params.tau, r.params.mu,
                      r.params.sigma);
        out += buf;
    }
    return out;
}

namespace {

// Minimal scanner for the recur report JSON: {"k":..,"rows":[{"s":..,
// "delta":..},..]}. Tolerates the other row fields and whitespace; not a
// general JSON parser.
DeltaTable parse_delta_json(std::string_view text) {
    DeltaTable table;
    const auto find_num = [&](std::string_view key, std::size_t from,
                              double& out, std::size_t& after) {
        const std::string quoted = "\"" + std::string(key) + "\"";
        const std::size_t at = text.find(quoted, from);
        if (at == std::string_view::npos)
            return false;
        std::size_t p = at + quoted.size();
        while (p < text.size() &&
               (text[p] == ':' || std::isspace(static_cast<unsigned char>(
                                       text[p]))))
            ++p;
        std::size_t q = p;
        while (q < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[q])) ||
                text[q] == '-' || text[q] == '+' || text[q] == '.' ||
                text[q] == 'e' || text[q] == 'E'))
            ++q;
        if (q == p)
            return false;
        out = parse_double_field(text.substr(p, q - p), "delta json");
        after = q;
        return true;
    };

    double kval = 0.0;
    std::size_t after = 0;
    if (!find_num("k", 0, kval, after))
        throw FormatError("delta json: missing \"k\"");
    table.k = static_cast<unsigned>(kval);

    std::size_t pos = after;
    while (true) {
        double s = 0.0, delta = 0.0;
        std::size_t after_s = 0, after_d = 0;
        if (!find_num("s", pos, s, after_s))
            break;
        if (!find_num("delta", after_s, delta, after_d))
            throw FormatError("delta json: row with \"s\" but no \"delta\"");
        table.delta[static_cast<unsigned>(s)] = delta;
        pos = after_d;
    }
    if (table.delta.empty())
        throw FormatError("delta json: no rows");
    return table;
}

} // namespace

DeltaTable parse_delta_table(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() &&
           std::isspace(static_cast<unsigned char>(text[first])))
        ++first;
    if (first < text.size() && text[first] == '{')
        return parse_delta_json(text);

    LineCursor cur{text};
    std::string_view line;
    if (!cur.next(line))
        throw FormatError("delta table: empty input");
    auto header = split_csv_line(line);
    std::size_t k_col = 0, s_col = 1, d_col = 2;
    if (header.size() == 3 && header[0] == "k" && header[1] == "s" &&
        header[2] == "delta") {
        // canonical layout
    } else if (header.size() == 8 && header[0] == "k" && header[1] == "s" &&
               header[7] == "delta") {
        d_col = 7; // fixture export layout
    } else {
        throw FormatError("delta table: header must be k,s,delta or the "
                          "fixture export layout");
    }

    DeltaTable table;
    bool have_k = false;
    while (cur.next(line)) {
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw FormatError("delta table line " +
                              std::to_string(cur.line_no) +
                              ": wrong field count");
        const std::string where =
            "delta table line " + std::to_string(cur.line_no);
        const auto k = static_cast<unsigned>(
            parse_uint_field(fields[k_col], where));
        const auto s = static_cast<unsigned>(
            parse_uint_field(fields[s_col], where));
        const double delta = parse_double_field(fields[d_col], where);
        if (!have_k) {
            table.k = k;
            have_k = true;
        } else if (table.k != k) {
            throw FormatError(where + ": mixed k values " +
                              std::to_string(table.k) + " and " +
                              std::to_string(k));
        }
        table.delta[s] = delta;
    }
    if (table.delta.empty())
        throw FormatError("delta table: no rows");
    return table;
}

} // namespace waring
