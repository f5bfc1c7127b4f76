#pragma once

// Quarterly time-series value types (Period, Series, Frame) and the
// deterministic transforms used by the rest of the toolkit: difference,
// lag, natural log, and period alignment. All types are immutable values
// after construction and safe to share across threads.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "econkit/errors.hpp"

namespace econkit {

/// One calendar quarter, e.g. 2001Q4. Ordering is (year, quarter).
struct Period {
    int year = 1900;
    int quarter = 1;  // 1..4

    Period() = default;
    Period(int year, int quarter) : year(year), quarter(quarter) {
        if (quarter < 1 || quarter > 4)
            throw DataError("quarter must be in 1..4, got " + std::to_string(quarter));
    }

    friend auto operator<=>(const Period&, const Period&) = default;

    /// Quarters elapsed since 0Q1; gives Period a linear index.
    std::int64_t ordinal() const {
        return static_cast<std::int64_t>(year) * 4 + (quarter - 1);
    }

    /// Advance by n quarters (n may be negative). 2001Q4 + 1 = 2002Q1.
    Period advanced(std::int64_t n) const {
        std::int64_t ord = ordinal() + n;
        Period p;
        p.year = static_cast<int>(ord >= 0 ? ord / 4 : (ord - 3) / 4);
        p.quarter = static_cast<int>(ord - static_cast<std::int64_t>(p.year) * 4) + 1;
        return p;
    }

    Period successor() const { return advanced(1); }

    std::string to_string() const {
        return std::to_string(year) + "Q" + std::to_string(quarter);
    }
};

/// Signed distance in quarters from a to b.
inline std::int64_t quarters_between(const Period& a, const Period& b) {
    return b.ordinal() - a.ordinal();
}

/// Parse "2001Q4" (case-insensitive; "2001.Q4" and "2001-Q4" also accepted).
/// Returns false on malformed input instead of throwing, so ingest can
/// attach row context to the error.
inline bool try_parse_period(const std::string& text, Period& out) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    std::size_t digits = 0;
    long year = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
        year = year * 10 + (text[i] - '0');
        ++i;
        ++digits;
    }
    if (digits < 1 || digits > 6) return false;
    if (i < n && (text[i] == '.' || text[i] == '-')) ++i;
    if (i >= n || (text[i] != 'Q' && text[i] != 'q')) return false;
    ++i;
    if (i + 1 != n || text[i] < '1' || text[i] > '4') return false;
    out = Period(static_cast<int>(year), text[i] - '0');
    return true;
}

inline Period parse_period(const std::string& text) {
    Period p;
    if (!try_parse_period(text, p)) throw DataError("bad period format: \"" + text + "\"");
    return p;
}

/// A named, contiguous quarterly series. No gaps, no non-finite values.
class Series {
public:
    Series(std::string name, Period start, std::vector<double> values)
        : name_(std::move(name)), start_(start), values_(std::move(values)) {
        if (values_.empty()) throw DataError("series \"" + name_ + "\" is empty");
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (!std::isfinite(values_[i]))
                throw DataError("series \"" + name_ + "\" has non-finite value at index " +
                                std::to_string(i));
    }

    const std::string& name() const { return name_; }
    const Period& start() const { return start_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    Period period_at(std::size_t i) const { return start_.advanced(static_cast<std::int64_t>(i)); }
    Period end() const { return period_at(values_.size() - 1); }

    Series renamed(std::string new_name) const {
        return Series(std::move(new_name), start_, values_);
    }

    /// Sub-series of `count` observations starting at index `offset`.
    Series slice(std::size_t offset, std::size_t count) const {
        if (offset + count > values_.size() || count == 0)
            throw DataError("slice out of range for series \"" + name_ + "\"");
        return Series(name_, start_.advanced(static_cast<std::int64_t>(offset)),
                      std::vector<double>(values_.begin() + static_cast<std::ptrdiff_t>(offset),
                                          values_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
    }

private:
    std::string name_;
    Period start_;
    std::vector<double> values_;
};

/// Order-`order` difference. The result is dated to the later period:
/// (diff s)[i] covers s.start + order + i.
inline Series diff(const Series& s, unsigned order = 1) {
    if (order < 1) throw DataError("difference order must be >= 1");
    if (s.size() <= order)
        throw SeriesTooShort("cannot difference \"" + s.name() + "\" of length " +
                             std::to_string(s.size()) + " with order " + std::to_string(order));
    std::vector<double> v(s.values().begin(), s.values().end());
    for (unsigned d = 0; d < order; ++d) {
        for (std::size_t i = v.size() - 1; i > 0; --i) v[i] -= v[i - 1];
        v.erase(v.begin());
    }
    return Series(s.name() + "_d" + std::to_string(order),
                  s.start().advanced(static_cast<std::int64_t>(order)), std::move(v));
}

/// Shift forward k quarters: result aligned so that result at period t
/// holds s at period t−k. Drops the last k observations.
inline Series lag(const Series& s, unsigned k = 1) {
    if (k < 1) throw DataError("lag must be >= 1");
    if (s.size() <= k)
        throw SeriesTooShort("cannot lag \"" + s.name() + "\" of length " +
                             std::to_string(s.size()) + " by " + std::to_string(k));
    std::vector<double> v(s.values().begin(), s.values().end() - static_cast<std::ptrdiff_t>(k));
    return Series(s.name() + "_l" + std::to_string(k),
                  s.start().advanced(static_cast<std::int64_t>(k)), std::move(v));
}

/// Element-wise natural log. All values must be strictly positive.
inline Series log_transform(const Series& s) {
    std::vector<double> v;
    v.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0.0)
            throw NonPositiveValue(i, "log of non-positive value " + std::to_string(s[i]) +
                                          " at index " + std::to_string(i) + " in series \"" +
                                          s.name() + "\"");
        v.push_back(std::log(s[i]));
    }
    return Series("log(" + s.name() + ")", s.start(), std::move(v));
}

/// Rectangular, period-aligned collection of series.
class Frame {
public:
    explicit Frame(std::vector<Series> columns) : columns_(std::move(columns)) {
        if (columns_.empty()) throw EmptyFrame("frame has no columns");
        const Period start = columns_.front().start();
        const std::size_t len = columns_.front().size();
        for (const auto& c : columns_) {
            if (c.start() != start || c.size() != len)
                throw DataError("frame columns are not aligned: \"" + c.name() + "\"");
        }
        for (std::size_t i = 0; i < columns_.size(); ++i)
            for (std::size_t j = i + 1; j < columns_.size(); ++j)
                if (columns_[i].name() == columns_[j].name())
                    throw DuplicateName(columns_[i].name());
    }

    const std::vector<Series>& columns() const { return columns_; }
    std::size_t n_rows() const { return columns_.front().size(); }
    std::size_t n_cols() const { return columns_.size(); }
    const Period& start() const { return columns_.front().start(); }
    Period end() const { return columns_.front().end(); }

    bool has_column(const std::string& name) const {
        return std::any_of(columns_.begin(), columns_.end(),
                           [&](const Series& s) { return s.name() == name; });
    }

    const Series& column(const std::string& name) const {
        for (const auto& c : columns_)
            if (c.name() == name) return c;
        throw MissingColumn(name);
    }

private:
    std::vector<Series> columns_;
};

/// Truncate all series to their common period window.
inline Frame align(const std::vector<Series>& columns) {
    if (columns.empty()) throw EmptyFrame("align: no series given");
    Period lo = columns.front().start();
    Period hi = columns.front().end();
    for (const auto& s : columns) {
        lo = std::max(lo, s.start());
        hi = std::min(hi, s.end());
    }
    if (lo > hi) throw NoOverlap("align: series have no common period window");
    std::vector<Series> out;
    out.reserve(columns.size());
    const auto len = static_cast<std::size_t>(quarters_between(lo, hi)) + 1;
    for (const auto& s : columns) {
        const auto offset = static_cast<std::size_t>(quarters_between(s.start(), lo));
        out.push_back(s.slice(offset, len));
    }
    return Frame(std::move(out));
}

inline Frame align(const Frame& f) { return align(f.columns()); }

}  // namespace econkit
