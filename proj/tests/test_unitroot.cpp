#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "econkit/unitroot.hpp"

using namespace econkit;
using Catch::Matchers::WithinAbs;

namespace {

/// Plain Dickey-Fuller t-ratio for variant=none, p=0, from the closed-form
/// single-regressor formulas. Used as the independent check.
double plain_df_none(const std::vector<double>& y) {
    double syy = 0.0, syd = 0.0;
    for (std::size_t t = 1; t < y.size(); ++t) {
        syy += y[t - 1] * y[t - 1];
        syd += y[t - 1] * (y[t] - y[t - 1]);
    }
    const double rho = syd / syy;
    double rss = 0.0;
    for (std::size_t t = 1; t < y.size(); ++t) {
        const double e = (y[t] - y[t - 1]) - rho * y[t - 1];
        rss += e * e;
    }
    const double s2 = rss / static_cast<double>(y.size() - 2);
    return rho / std::sqrt(s2 / syy);
}

}  // namespace

TEST_CASE("hand-derived fixture y = 1,2,3,4") {
    const auto res = adf_test(std::vector<double>{1, 2, 3, 4}, AdfVariant::none);
    CHECK_THAT(res.statistic, WithinAbs(3.46410, 1e-5));
    CHECK(res.lag_order == 0);
    CHECK(res.nobs_used == 3);
    CHECK(res.significance == Significance::none);  // right tail, never rejects
}

TEST_CASE("constant series is degenerate") {
    CHECK_THROWS_AS(adf_test(std::vector<double>{5, 5, 5, 5, 5}, AdfVariant::none), ZeroVariance);
}

TEST_CASE("series too short") {
    CHECK_THROWS_AS(adf_test(std::vector<double>{1, 2}, AdfVariant::none), SeriesTooShort);
    CHECK_THROWS_AS(adf_test(std::vector<double>{1, 2, 3, 4}, AdfVariant::constant_trend,
                             LagSelection::fixed(1)),
                    SeriesTooShort);
}

TEST_CASE("critical values: published table points") {
    const auto none79 = adf_critical_values(AdfVariant::none, 79);
    CHECK_THAT(none79.pct5, WithinAbs(-1.95, 0.01));
    const auto const_big = adf_critical_values(AdfVariant::constant, 10000);
    CHECK_THAT(const_big.pct5, WithinAbs(-2.86, 0.01));
    const auto trend_big = adf_critical_values(AdfVariant::constant_trend, 10000);
    CHECK_THAT(trend_big.pct5, WithinAbs(-3.41, 0.01));
    CHECK_THROWS_AS(adf_critical_values(AdfVariant::none, 9), SampleTooSmall);
}

TEST_CASE("critical values: ordering and interpolation are monotone") {
    for (auto variant : {AdfVariant::none, AdfVariant::constant, AdfVariant::constant_trend}) {
        for (Eigen::Index n : {10, 25, 37, 79, 100, 180, 250, 400, 500, 750, 5000}) {
            const auto cv = adf_critical_values(variant, n);
            CHECK(cv.pct1 < cv.pct5);
            CHECK(cv.pct5 < cv.pct10);
        }
    }
}

TEST_CASE("significance grading is consistent with the critical values") {
    const CriticalValues cv{-2.6, -1.95, -1.6};
    CHECK(grade_significance(-3.0, cv) == Significance::at_1);
    CHECK(grade_significance(-2.0, cv) == Significance::at_5);
    CHECK(grade_significance(-1.7, cv) == Significance::at_10);
    CHECK(grade_significance(-1.0, cv) == Significance::none);
    CHECK(grade_significance(0.6, cv) == Significance::none);
}

TEST_CASE("property: p=0 statistic equals the plain Dickey-Fuller formula") {
    std::mt19937 gen(4242);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<double> y(20 + gen() % 60);
        y[0] = dist(gen);
        for (std::size_t t = 1; t < y.size(); ++t) y[t] = 0.8 * y[t - 1] + dist(gen);
        const auto res = adf_test(y, AdfVariant::none);
        CHECK_THAT(res.statistic, WithinAbs(plain_df_none(y), 1e-10));
    }
}

TEST_CASE("property: scale invariance, but not shift invariance, for variant none") {
    std::mt19937 gen(7);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> y(80);
    y[0] = 5.0 + dist(gen);
    for (std::size_t t = 1; t < y.size(); ++t) y[t] = y[t - 1] + dist(gen);
    const double base = adf_test(y, AdfVariant::none).statistic;

    for (double c : {0.001, 0.5, 3.0, 1e6}) {
        auto scaled = y;
        for (auto& v : scaled) v *= c;
        CHECK_THAT(adf_test(scaled, AdfVariant::none).statistic, WithinAbs(base, 1e-9));
    }
    // shifting the level must change the statistic (no hidden demeaning)
    auto shifted = y;
    for (auto& v : shifted) v += 100.0;
    CHECK(std::fabs(adf_test(shifted, AdfVariant::none).statistic - base) > 1e-3);
}

TEST_CASE("aic lag selection stays in range and runs the refit") {
    std::mt19937 gen(55);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> y(120);
    y[0] = dist(gen);
    y[1] = dist(gen);
    for (std::size_t t = 2; t < y.size(); ++t)
        y[t] = 0.4 * y[t - 1] + 0.35 * y[t - 2] + dist(gen);
    const auto res = adf_test(y, AdfVariant::constant, LagSelection::aic(6));
    CHECK(res.lag_order >= 0);
    CHECK(res.lag_order <= 6);
    CHECK(res.nobs_used == static_cast<Eigen::Index>(y.size()) - 1 - res.lag_order);
    CHECK(adf_max_lag_rule(120) == 12);
}

TEST_CASE("Monte Carlo size: driftless random walks, T=100") {
    std::mt19937 gen(20240229);
    std::normal_distribution<double> dist(0.0, 1.0);
    int rejections = 0;
    const int trials = 200;
    for (int m = 0; m < trials; ++m) {
        std::vector<double> y(100);
        y[0] = dist(gen);
        for (std::size_t t = 1; t < y.size(); ++t) y[t] = y[t - 1] + dist(gen);
        const auto res = adf_test(y, AdfVariant::none);
        if (res.statistic < res.critical_values.pct5) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / trials;
    CHECK(rate >= 0.02);
    CHECK(rate <= 0.09);
}

TEST_CASE("Monte Carlo power: AR(1) with coefficient 0.5, T=200") {
    std::mt19937 gen(987);
    std::normal_distribution<double> dist(0.0, 1.0);
    int rejections = 0;
    const int trials = 200;
    for (int m = 0; m < trials; ++m) {
        std::vector<double> y(200);
        y[0] = dist(gen);
        for (std::size_t t = 1; t < y.size(); ++t) y[t] = 0.5 * y[t - 1] + dist(gen);
        const auto res = adf_test(y, AdfVariant::none);
        if (res.statistic < res.critical_values.pct5) ++rejections;
    }
    CHECK(static_cast<double>(rejections) / trials >= 0.80);
}

TEST_CASE("stationarity report: ordering and expected decisions") {
    std::mt19937 gen(1001);
    std::normal_distribution<double> dist(0.0, 1.0);

    // random-walk columns: levels rarely significant
    std::vector<Series> rw_cols;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> y(100);
        y[0] = dist(gen);
        for (std::size_t t = 1; t < y.size(); ++t) y[t] = y[t - 1] + dist(gen);
        rw_cols.emplace_back("rw" + std::to_string(c), Period{2000, 1}, y);
    }
    const auto rw_rows = stationarity_report(Frame(rw_cols), AdfVariant::none);
    REQUIRE(rw_rows.size() == 6);
    CHECK(rw_rows[0].label == "rw0");
    CHECK(rw_rows[3].label == "rw0 (First Difference)");
    int level_hits = 0;
    for (int c = 0; c < 3; ++c)
        if (rw_rows[c].result.significance != Significance::none) ++level_hits;
    CHECK(level_hits == 0);  // this seed draws unremarkable random walks
    for (int c = 3; c < 6; ++c) CHECK(rw_rows[c].result.significance == Significance::at_1);

    // white-noise columns: levels already overwhelmingly significant
    std::vector<Series> wn_cols;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> y(100);
        for (auto& v : y) v = dist(gen);
        wn_cols.emplace_back("wn" + std::to_string(c), Period{2000, 1}, y);
    }
    const auto wn_rows = stationarity_report(Frame(wn_cols), AdfVariant::none);
    REQUIRE(wn_rows.size() == 6);
    for (int c = 0; c < 3; ++c) CHECK(wn_rows[c].result.significance == Significance::at_1);
}
