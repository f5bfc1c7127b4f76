#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "econkit/timeseries.hpp"

using namespace econkit;

TEST_CASE("period ordering and arithmetic") {
    CHECK(Period{2001, 4} < Period{2002, 1});
    CHECK(Period{2001, 1} < Period{2001, 2});
    CHECK(Period{2001, 4}.successor() == Period{2002, 1});
    CHECK(Period{2001, 1}.advanced(-1) == Period{2000, 4});
    CHECK(Period{2001, 4}.advanced(79) == Period{2021, 3});
    CHECK(quarters_between(Period{2001, 4}, Period{2021, 3}) == 79);
    CHECK(Period{2001, 4}.to_string() == "2001Q4");
    CHECK_THROWS_AS(Period(2001, 5), DataError);
}

TEST_CASE("period parsing accepts the documented spellings") {
    CHECK(parse_period("2001Q4") == Period{2001, 4});
    CHECK(parse_period("2001q4") == Period{2001, 4});
    CHECK(parse_period("2001.Q4") == Period{2001, 4});
    CHECK(parse_period("2001-Q4") == Period{2001, 4});
    for (const auto* bad : {"2001", "Q4", "2001Q5", "2001Q0", "2001Q44", "2001 Q4", ""})
        CHECK_THROWS_AS(parse_period(bad), DataError);
}

TEST_CASE("series construction rejects bad values") {
    CHECK_THROWS_AS(Series("x", {2000, 1}, {}), DataError);
    CHECK_THROWS_AS(Series("x", {2000, 1}, {1.0, std::nan("")}), DataError);
    CHECK_THROWS_AS(Series("x", {2000, 1}, {1.0, INFINITY}), DataError);
}

TEST_CASE("diff examples") {
    Series s("x", {2000, 1}, {1, 2, 4});
    Series d = diff(s, 1);
    CHECK(d.values()[0] == 1.0);
    CHECK(d.values()[1] == 2.0);
    CHECK(d.size() == 2);
    CHECK(d.start() == Period{2000, 2});
    CHECK(d.name() != s.name());  // difference marker applied

    Series c("c", {2000, 1}, {5, 5, 5, 5});
    Series dc = diff(c, 1);
    REQUIRE(dc.size() == 3);
    for (double v : dc.values()) CHECK(v == 0.0);

    // 80 quarterly observations -> 79 after differencing
    std::vector<double> v(80);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i * i);
    Series q("q", {2001, 4}, v);
    CHECK(q.end() == Period{2021, 3});
    CHECK(diff(q, 1).size() == 79);

    CHECK_THROWS_AS(diff(Series("s", {2000, 1}, {1.0}), 1), SeriesTooShort);
    CHECK_THROWS_AS(diff(Series("s", {2000, 1}, {1.0, 2.0}), 2), SeriesTooShort);
}

TEST_CASE("lag examples") {
    Series s("x", {2000, 1}, {1, 2, 3, 4});
    Series l = lag(s, 1);
    REQUIRE(l.size() == 3);
    CHECK(l.values()[0] == 1.0);
    CHECK(l.values()[2] == 3.0);
    CHECK(l.start() == Period{2000, 2});

    CHECK_THROWS_AS(lag(Series("y", {2000, 1}, {7.0}), 1), SeriesTooShort);

    // composition used as the ADF augmentation term
    Series ld = lag(diff(s, 1), 1);
    REQUIRE(ld.size() == 2);
    CHECK(ld.values()[0] == 1.0);
    CHECK(ld.values()[1] == 1.0);
    CHECK(ld.start() == Period{2000, 3});
}

TEST_CASE("log transform examples") {
    const double e = std::exp(1.0);
    Series s("m", {2000, 1}, {1.0, e, e * e});
    Series t = log_transform(s);
    CHECK_THAT(t.values()[0], Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(t.values()[1], Catch::Matchers::WithinAbs(1.0, 1e-15));
    CHECK_THAT(t.values()[2], Catch::Matchers::WithinAbs(2.0, 1e-15));

    try {
        log_transform(Series("m", {2000, 1}, {10.0, -1.0}));
        FAIL("expected NonPositiveValue");
    } catch (const NonPositiveValue& err) {
        CHECK(err.index == 1);
    }
}

TEST_CASE("align examples") {
    Series a("a", {2001, 4}, std::vector<double>(80, 1.0));
    Series b("b", {2001, 4}, std::vector<double>(80, 2.0));
    Frame f = align({a, b});
    CHECK(f.start() == Period{2001, 4});
    CHECK(f.n_rows() == 80);

    Series c("c", {2002, 1}, std::vector<double>(79, 3.0));
    Frame g = align({a, c});
    CHECK(g.start() == Period{2002, 1});
    CHECK(g.n_rows() == 79);
    CHECK(g.end() == Period{2021, 3});

    Series d1("d", {2001, 1}, std::vector<double>(4, 0.0));
    Series d2("e", {2010, 1}, std::vector<double>(4, 0.0));
    CHECK_THROWS_AS(align({d1, d2}), NoOverlap);

    CHECK_THROWS_AS(align({a, a}), DuplicateName);
    CHECK_THROWS_AS(align(std::vector<Series>{}), EmptyFrame);
}

TEST_CASE("property: diff round-trips through cumulative summation") {
    std::mt19937 gen(91);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> v(2 + gen() % 40);
        for (auto& x : v) x = dist(gen);
        Series s("s", {1995, 3}, v);
        Series d = diff(s, 1);
        double acc = v[0];
        for (std::size_t i = 0; i < d.size(); ++i) {
            acc += d.values()[i];
            CHECK_THAT(acc, Catch::Matchers::WithinRel(v[i + 1], 1e-12));
        }
    }
    // integer-valued input reconstructs bitwise
    Series s("i", {2000, 1}, {3, 7, -2, 9, 9, 4});
    Series d = diff(s, 1);
    double acc = 3;
    for (std::size_t i = 0; i < d.size(); ++i) {
        acc += d.values()[i];
        CHECK(acc == s.values()[i + 1]);
    }
}

TEST_CASE("property: diff(diff(s)) equals diff(s,2)") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> v(3 + gen() % 30);
        for (auto& x : v) x = dist(gen);
        Series s("s", {2000, 1}, v);
        Series twice = diff(diff(s, 1), 1);
        Series second = diff(s, 2);
        REQUIRE(twice.size() == second.size());
        CHECK(twice.start() == second.start());
        for (std::size_t i = 0; i < twice.size(); ++i)
            CHECK(twice.values()[i] == second.values()[i]);
    }
}

TEST_CASE("property: align is idempotent") {
    Series a("a", {2001, 4}, std::vector<double>(30, 1.5));
    Series b("b", {2003, 1}, std::vector<double>(40, 2.5));
    Series c("c", {2000, 2}, std::vector<double>(60, -1.0));
    Frame once = align({a, b, c});
    Frame twice = align(once);
    CHECK(once.start() == twice.start());
    REQUIRE(once.n_rows() == twice.n_rows());
    for (std::size_t j = 0; j < once.n_cols(); ++j)
        for (std::size_t i = 0; i < once.n_rows(); ++i)
            CHECK(once.columns()[j][i] == twice.columns()[j][i]);
}

TEST_CASE("property: log_transform inverts exp") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> raw(10), expd(10);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            raw[i] = dist(gen);
            expd[i] = std::exp(raw[i]);
        }
        Series s("s", {2000, 1}, expd);
        Series t = log_transform(s);
        for (std::size_t i = 0; i < raw.size(); ++i)
            CHECK_THAT(t.values()[i], Catch::Matchers::WithinAbs(raw[i], 1e-12));
    }
}
