#pragma once

// CSV ingest for the quarterly dataset: wide layout, one row per quarter,
// one column per variable. Canonical header is
//
//   period,REER,USLR,M2,CPI,WIR
//
// Periods are "2001Q4" (also "2001.Q4" / "2001-Q4", case-insensitive),
// cells are C-locale numbers, no thousands separators. Columns named in
// `log_columns` are natural-logged at load so downstream code never
// special-cases them; the frame keeps the schema's column names.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "econkit/errors.hpp"
#include "econkit/timeseries.hpp"

namespace econkit {

struct DatasetSchema {
    std::string period_column = "period";
    std::vector<std::string> variable_columns = {"REER", "USLR", "M2", "CPI", "WIR"};
    std::vector<std::string> log_columns = {"M2"};

    void check() const {
        if (variable_columns.empty()) throw DataError("schema has no variable columns");
        for (std::size_t i = 0; i < variable_columns.size(); ++i) {
            if (variable_columns[i] == period_column)
                throw DataError("period column \"" + period_column + "\" is also a variable");
            for (std::size_t j = i + 1; j < variable_columns.size(); ++j)
                if (variable_columns[i] == variable_columns[j])
                    throw DuplicateName(variable_columns[i]);
        }
        for (const auto& c : log_columns)
            if (std::find(variable_columns.begin(), variable_columns.end(), c) ==
                variable_columns.end())
                throw DataError("log column \"" + c + "\" is not a variable column");
    }
};

struct SummaryRow {
    std::string variable;
    double minimum = 0.0;
    double mean = 0.0;
    double maximum = 0.0;
    std::size_t count = 0;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cells.push_back(trim(cur));
    return cells;
}

inline bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (*begin == '+') ++begin;  // std::from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

/// Neumaier compensated summation; keeps means reproducible at 1e-15 scale.
inline double compensated_sum(std::span<const double> v) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace detail

/// Load and validate a wide CSV per the schema. Rows are sorted by period;
/// the period index must be contiguous and duplicate-free.
inline Frame load_csv(const std::string& path, const DatasetSchema& schema = {}) {
    schema.check();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFound(path);

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty file: " + path);
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    const auto header = detail::split_csv_line(line);
    auto find_col = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw MissingColumn(name);
    };
    const std::size_t period_idx = find_col(schema.period_column);
    std::vector<std::size_t> var_idx;
    var_idx.reserve(schema.variable_columns.size());
    for (const auto& name : schema.variable_columns) var_idx.push_back(find_col(name));

    struct Row {
        Period period;
        std::vector<double> values;
    };
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != header.size())
            throw DataError("row " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
        Row row;
        if (!try_parse_period(cells[period_idx], row.period))
            throw BadPeriodFormat(line_no, cells[period_idx]);
        row.values.reserve(var_idx.size());
        for (std::size_t j = 0; j < var_idx.size(); ++j) {
            double v = 0.0;
            if (!detail::parse_double(cells[var_idx[j]], v))
                throw NonNumericCell(line_no, schema.variable_columns[j], cells[var_idx[j]]);
            row.values.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DataError("no data rows in " + path);

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.period < b.period; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].period == rows[i - 1].period)
            throw DuplicatePeriod(rows[i].period.to_string());
        if (rows[i].period != rows[i - 1].period.successor())
            throw GapInPeriods(rows[i - 1].period.successor().to_string());
    }

    std::vector<Series> columns;
    columns.reserve(schema.variable_columns.size());
    for (std::size_t j = 0; j < schema.variable_columns.size(); ++j) {
        std::vector<double> v(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) v[i] = rows[i].values[j];
        Series s(schema.variable_columns[j], rows.front().period, std::move(v));
        const bool do_log =
            std::find(schema.log_columns.begin(), schema.log_columns.end(),
                      schema.variable_columns[j]) != schema.log_columns.end();
        if (do_log) s = log_transform(s).renamed(schema.variable_columns[j]);
        columns.push_back(std::move(s));
    }
    return Frame(std::move(columns));
}

/// Canonical round-trip writer: header `period,<columns>`, LF endings,
/// 17 significant digits (enough for exact reload).
inline void write_csv(const Frame& f, std::ostream& out,
                      const std::string& period_column = "period") {
    out << period_column;
    for (const auto& c : f.columns()) out << ',' << c.name();
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < f.n_rows(); ++i) {
        out << f.start().advanced(static_cast<std::int64_t>(i)).to_string();
        for (const auto& c : f.columns()) {
            std::snprintf(buf, sizeof buf, "%.17g", c[i]);
            out << ',' << buf;
        }
        out << '\n';
    }
}

inline void write_csv(const Frame& f, const std::string& path,
                      const std::string& period_column = "period") {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    write_csv(f, out, period_column);
}

/// Min / compensated mean / max / count per column, in frame column order.
inline std::vector<SummaryRow> summary_stats(const Frame& f) {
    if (f.n_rows() == 0) throw EmptyFrame("summary of empty frame");
    std::vector<SummaryRow> rows;
    rows.reserve(f.n_cols());
    for (const auto& c : f.columns()) {
        SummaryRow r;
        r.variable = c.name();
        r.count = c.size();
        r.minimum = *std::min_element(c.values().begin(), c.values().end());
        r.maximum = *std::max_element(c.values().begin(), c.values().end());
        r.mean = detail::compensated_sum(c.values()) / static_cast<double>(c.size());
        rows.push_back(std::move(r));
    }
    return rows;
}

struct Finding {
    enum class Kind { zero_variance, large_jump } kind;
    std::string column;
    std::size_t index = 0;  // offending observation (large_jump only)
    std::string message;
};

struct ValidationReport {
    std::size_t n_obs = 0;
    std::vector<Finding> findings;
    bool clean() const { return findings.empty(); }
};

/// Report-only checks: zero-variance columns (they break regression) and
/// outliers more than 10 standard deviations from the rest of the column
/// (leave-one-out, so a single spike cannot mask itself; needs n >= 8).
inline ValidationReport validate(const Frame& f) {
    ValidationReport rep;
    rep.n_obs = f.n_rows();
    for (const auto& c : f.columns()) {
        const auto v = c.values();
        const auto n = v.size();
        const double lo = *std::min_element(v.begin(), v.end());
        const double hi = *std::max_element(v.begin(), v.end());
        if (lo == hi) {
            rep.findings.push_back({Finding::Kind::zero_variance, c.name(), 0,
                                    "column \"" + c.name() + "\" has zero variance"});
            continue;
        }
        if (n < 8) continue;
        // Center on the column mean first so the shifted sums keep precision.
        const double mu0 = detail::compensated_sum(v) / static_cast<double>(n);
        double sum = 0.0, sumsq = 0.0;
        for (double x : v) {
            const double w = x - mu0;
            sum += w;
            sumsq += w * w;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double w = v[i] - mu0;
            const double m = (sum - w) / static_cast<double>(n - 1);
            double var = (sumsq - w * w) / static_cast<double>(n - 1) - m * m;
            var = var > 0.0 ? var * static_cast<double>(n - 1) / static_cast<double>(n - 2) : 0.0;
            const double dev = std::fabs(w - m);
            if (dev > 10.0 * std::sqrt(var)) {
                rep.findings.push_back(
                    {Finding::Kind::large_jump, c.name(), i,
                     "column \"" + c.name() + "\" value " + std::to_string(v[i]) + " at " +
                         c.period_at(i).to_string() + " is more than 10 standard deviations " +
                         "from the rest of the column"});
            }
        }
    }
    return rep;
}

}  // namespace econkit
