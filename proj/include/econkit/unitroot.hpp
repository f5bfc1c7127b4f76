#pragma once

// Augmented Dickey-Fuller unit-root test:
//
//   dy_t = rho * y_{t-1} + sum_{i=1..p} gamma_i * dy_{t-i} [+ c] [+ d*t] + e_t
//
// The statistic is the classical t-ratio on rho, compared against embedded
// finite-sample Dickey-Fuller critical values (Fuller's tables, linearly
// interpolated in 1/n). The test is left-tailed: reject the unit root when
// the statistic falls below the critical value.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "econkit/errors.hpp"
#include "econkit/linreg.hpp"
#include "econkit/timeseries.hpp"

namespace econkit {

enum class AdfVariant { none, constant, constant_trend };

inline int deterministic_terms(AdfVariant v) {
    switch (v) {
        case AdfVariant::none: return 0;
        case AdfVariant::constant: return 1;
        case AdfVariant::constant_trend: return 2;
    }
    return 0;
}

enum class Significance { none, at_10, at_5, at_1 };

struct CriticalValues {
    double pct1 = 0.0;
    double pct5 = 0.0;
    double pct10 = 0.0;
};

struct AdfResult {
    double statistic = 0.0;
    AdfVariant variant = AdfVariant::none;
    int lag_order = 0;
    Eigen::Index nobs_used = 0;
    CriticalValues critical_values;
    Significance significance = Significance::none;
};

/// Lag-order policy: a fixed p, or AIC selection over 0..max_p.
struct LagSelection {
    enum class Mode { fixed, aic } mode = Mode::fixed;
    int p = 0;  // fixed order, or max_p under AIC

    static LagSelection fixed(int p) { return {Mode::fixed, p}; }
    static LagSelection aic(int max_p) { return {Mode::aic, max_p}; }
};

/// Conventional AIC-style upper bound floor(12 (T/100)^{1/4}).
inline int adf_max_lag_rule(std::size_t T) {
    return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(T) / 100.0, 0.25)));
}

namespace detail {

// Finite-sample Dickey-Fuller critical values (Fuller's tables), rows
// n = 25, 50, 100, 250, 500, infinity; columns 1%, 5%, 10%.
inline constexpr int kDfRows = 6;
inline constexpr double kDfSampleSizes[kDfRows] = {25, 50, 100, 250, 500,
                                                   std::numeric_limits<double>::infinity()};
inline constexpr double kDfNone[kDfRows][3] = {
    {-2.66, -1.95, -1.60}, {-2.62, -1.95, -1.61}, {-2.60, -1.95, -1.61},
    {-2.58, -1.95, -1.62}, {-2.58, -1.95, -1.62}, {-2.58, -1.95, -1.62},
};
inline constexpr double kDfConstant[kDfRows][3] = {
    {-3.75, -3.00, -2.63}, {-3.58, -2.93, -2.60}, {-3.51, -2.89, -2.58},
    {-3.46, -2.88, -2.57}, {-3.44, -2.87, -2.57}, {-3.43, -2.86, -2.57},
};
inline constexpr double kDfConstantTrend[kDfRows][3] = {
    {-4.38, -3.60, -3.24}, {-4.15, -3.50, -3.18}, {-4.04, -3.45, -3.15},
    {-3.99, -3.43, -3.13}, {-3.98, -3.42, -3.13}, {-3.96, -3.41, -3.12},
};

inline double interp_cv(const double table[kDfRows][3], double n, int col) {
    if (n <= kDfSampleSizes[0]) return table[0][col];
    for (int r = 1; r < kDfRows; ++r) {
        if (n <= kDfSampleSizes[r]) {
            // Linear in 1/n; the infinity row maps to 1/n = 0.
            const double x0 = 1.0 / kDfSampleSizes[r - 1];
            const double x1 = std::isinf(kDfSampleSizes[r]) ? 0.0 : 1.0 / kDfSampleSizes[r];
            const double x = 1.0 / n;
            const double t = (x - x0) / (x1 - x0);
            return table[r - 1][col] + t * (table[r][col] - table[r - 1][col]);
        }
    }
    return table[kDfRows - 1][col];
}

}  // namespace detail

/// Finite-sample critical values for an effective sample of size n.
inline CriticalValues adf_critical_values(AdfVariant variant, Eigen::Index n) {
    if (n < 10) throw SampleTooSmall("ADF critical values need n >= 10, got " + std::to_string(n));
    const double (*table)[3] = detail::kDfNone;
    if (variant == AdfVariant::constant) table = detail::kDfConstant;
    if (variant == AdfVariant::constant_trend) table = detail::kDfConstantTrend;
    const auto dn = static_cast<double>(n);
    return {detail::interp_cv(table, dn, 0), detail::interp_cv(table, dn, 1),
            detail::interp_cv(table, dn, 2)};
}

inline Significance grade_significance(double statistic, const CriticalValues& cv) {
    if (statistic < cv.pct1) return Significance::at_1;
    if (statistic < cv.pct5) return Significance::at_5;
    if (statistic < cv.pct10) return Significance::at_10;
    return Significance::none;
}

namespace detail {

/// ADF regression for a fixed lag order p. `first_obs` is the index into
/// the differenced series of the first usable observation, which lets AIC
/// selection hold the estimation sample fixed across candidate orders.
inline FitResult adf_fit(const std::vector<double>& y, AdfVariant variant, int p,
                         std::size_t first_obs) {
    const std::size_t n = y.size();
    const std::size_t ndiff = n - 1;               // dy has n-1 entries, dy[i] = y[i+1]-y[i]
    const std::size_t m = ndiff - first_obs;       // effective observations
    const int det = deterministic_terms(variant);
    const auto k = static_cast<Eigen::Index>(det + 1 + p);

    Eigen::VectorXd dep(static_cast<Eigen::Index>(m));
    Eigen::MatrixXd X(static_cast<Eigen::Index>(m), k);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    if (det >= 1) names.push_back("const");
    if (det >= 2) names.push_back("trend");
    names.push_back("y.l1");
    for (int i = 1; i <= p; ++i) names.push_back("dy.l" + std::to_string(i));

    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t i = first_obs + r;  // index into dy
        const auto row = static_cast<Eigen::Index>(r);
        dep(row) = y[i + 1] - y[i];
        Eigen::Index c = 0;
        if (det >= 1) X(row, c++) = 1.0;
        if (det >= 2) X(row, c++) = static_cast<double>(r + 1);
        X(row, c++) = y[i];  // level one quarter before the difference
        for (int l = 1; l <= p; ++l) {
            const std::size_t j = i - static_cast<std::size_t>(l);
            X(row, c++) = y[j + 1] - y[j];
        }
    }
    DesignMatrix design(std::move(X), det >= 1, std::move(names));
    return fit_ols(design, dep);
}

inline double aic_of(const FitResult& fit) {
    const auto m = static_cast<double>(fit.nobs);
    const double rss = fit.residuals.squaredNorm();
    const auto k = static_cast<double>(fit.coefficients.size());
    return m * std::log(rss / m) + 2.0 * k;
}

}  // namespace detail

/// ADF test on a plain vector of observations.
inline AdfResult adf_test(const std::vector<double>& y, AdfVariant variant,
                          LagSelection selection = LagSelection::fixed(0)) {
    const int det = deterministic_terms(variant);
    if (selection.p < 0) throw ModelError("ADF lag order must be non-negative");
    const auto needed = static_cast<std::size_t>(selection.p + 3 + det);
    if (y.size() < needed)
        throw SeriesTooShort("ADF needs at least " + std::to_string(needed) +
                             " observations, got " + std::to_string(y.size()));

    int p = selection.p;
    if (selection.mode == LagSelection::Mode::aic) {
        // Candidates are compared on the common sample implied by max_p,
        // then the winner is refit on its own maximal sample.
        double best = std::numeric_limits<double>::infinity();
        int best_p = 0;
        for (int cand = 0; cand <= selection.p; ++cand) {
            const FitResult fit =
                detail::adf_fit(y, variant, cand, static_cast<std::size_t>(selection.p));
            const double aic = detail::aic_of(fit);
            if (aic < best) {
                best = aic;
                best_p = cand;
            }
        }
        p = best_p;
    }

    const FitResult fit = detail::adf_fit(y, variant, p, static_cast<std::size_t>(p));
    const auto rho_index = static_cast<Eigen::Index>(det);
    if (!(fit.std_errors(rho_index) > 0.0))
        throw ZeroVariance("y.l1");  // degenerate regression, no usable t-ratio

    AdfResult res;
    res.statistic = fit.coefficients(rho_index) / fit.std_errors(rho_index);
    res.variant = variant;
    res.lag_order = p;
    res.nobs_used = fit.nobs;
    // Below the tabulated range the smallest-sample row is the best
    // available yardstick; the statistic itself is exact either way.
    res.critical_values = adf_critical_values(variant, std::max<Eigen::Index>(fit.nobs, 10));
    res.significance = grade_significance(res.statistic, res.critical_values);
    return res;
}

inline AdfResult adf_test(const Series& s, AdfVariant variant,
                          LagSelection selection = LagSelection::fixed(0)) {
    return adf_test(std::vector<double>(s.values().begin(), s.values().end()), variant, selection);
}

struct StationarityRow {
    std::string label;
    AdfResult result;
};

/// One ADF row per column in levels, then one per first difference.
inline std::vector<StationarityRow> stationarity_report(const Frame& f, AdfVariant variant,
                                                        LagSelection selection =
                                                            LagSelection::fixed(0)) {
    std::vector<StationarityRow> rows;
    rows.reserve(2 * f.n_cols());
    for (const auto& c : f.columns())
        rows.push_back({c.name(), adf_test(c, variant, selection)});
    for (const auto& c : f.columns())
        rows.push_back({c.name() + " (First Difference)", adf_test(diff(c, 1), variant, selection)});
    return rows;
}

}  // namespace econkit
