#pragma once

// Shapiro-Wilk normality test, Royston's AS R94 approximation
// (Applied Statistics 44, 1995), valid for 3 <= n <= 5000. This is the
// same approximation mainstream statistical software computes, so W and
// p-values are directly comparable with R/scipy output. Ties in the input
// are permitted; no continuity correction is applied.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "econkit/distributions.hpp"
#include "econkit/errors.hpp"

namespace econkit {

struct SwResult {
    double w_statistic = 0.0;
    double p_value = 0.0;
    std::size_t n = 0;
};

namespace detail {

/// Polynomial with c[0] the constant term.
inline double poly(std::span<const double> c, double x) {
    double r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

}  // namespace detail

inline SwResult shapiro_wilk(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 3) throw SampleTooSmall("Shapiro-Wilk needs n >= 3, got " + std::to_string(n));
    if (n > 5000) throw SampleTooLarge("Shapiro-Wilk is valid up to n = 5000, got " +
                                       std::to_string(n));

    std::vector<double> xs(x.begin(), x.end());
    std::sort(xs.begin(), xs.end());
    const double range = xs[n - 1] - xs[0];
    if (range == 0.0) throw ZeroVariance("sample");

    const auto an = static_cast<double>(n);
    const std::size_t n2 = n / 2;

    // Coefficients for the upper half of the sample, built from expected
    // normal order statistics (Blom scores) and Royston's corrections to
    // the two largest weights.
    std::vector<double> half(n2);
    if (n == 3) {
        half[0] = 0.70710678118654752;  // sqrt(1/2)
    } else {
        static constexpr double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
        static constexpr double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
        std::vector<double> m(n2);
        double summ2 = 0.0;
        for (std::size_t i = 0; i < n2; ++i) {
            m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
            summ2 += m[i] * m[i];
        }
        summ2 *= 2.0;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1.0 / std::sqrt(an);
        const double a1 = detail::poly(c1, rsn) - m[0] / ssumm2;
        std::size_t adjusted;
        double fac;
        if (n > 5) {
            const double a2 = detail::poly(c2, rsn) - m[1] / ssumm2;
            fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                            (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
            half[0] = a1;
            half[1] = a2;
            adjusted = 2;
        } else {
            fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
            half[0] = a1;
            adjusted = 1;
        }
        for (std::size_t i = adjusted; i < n2; ++i) half[i] = -m[i] / fac;
    }

    // W as the squared correlation between the sample and the antisymmetric
    // coefficient vector; the sample is centered first and scaled by its
    // range, and 1-W is formed directly to keep precision when W is close
    // to one.
    std::vector<double> a(n, 0.0);
    for (std::size_t i = 0; i < n2; ++i) {
        a[i] = -half[i];
        a[n - 1 - i] = half[i];
    }
    double amean = 0.0, xmean0 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        amean += a[i];
        xmean0 += xs[i];
    }
    amean /= an;
    xmean0 /= an;
    double xmean = 0.0;
    for (std::size_t i = 0; i < n; ++i) xmean += (xs[i] - xmean0) / range;
    xmean /= an;
    double ssa = 0.0, ssx = 0.0, sax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - amean;
        const double dx = (xs[i] - xmean0) / range - xmean;
        ssa += da * da;
        ssx += dx * dx;
        sax += da * dx;
    }
    const double ssassx = std::sqrt(ssa * ssx);
    double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    if (w1 < 0.0) w1 = 0.0;
    if (w1 > 1.0) w1 = 1.0;
    const double w = 1.0 - w1;

    SwResult res;
    res.w_statistic = w;
    res.n = n;

    if (n == 3) {
        constexpr double pi6 = 1.90985931710274403;   // 6/pi
        constexpr double stqr = 1.04719755119659775;  // asin(sqrt(3/4))
        double p = pi6 * (std::asin(std::sqrt(w)) - stqr);
        res.p_value = std::clamp(p, 0.0, 1.0);
        return res;
    }

    static constexpr double c3[4] = {0.544, -0.39978, 0.025054, -6.714e-4};
    static constexpr double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
    static constexpr double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
    static constexpr double c6[3] = {-0.4803, -0.082676, 0.0030302};
    static constexpr double g[2] = {-2.273, 0.459};

    const double y_raw = std::log(w1 > 0.0 ? w1 : 1e-300);
    const double ln_n = std::log(an);
    double mu, sigma, y = y_raw;
    if (n <= 11) {
        const double gamma = detail::poly(g, an);
        if (y >= gamma) {
            res.p_value = 1e-99;  // W indistinguishable from 1 at this n
            return res;
        }
        y = -std::log(gamma - y);
        mu = detail::poly(c3, an);
        sigma = std::exp(detail::poly(c4, an));
    } else {
        mu = detail::poly(c5, ln_n);
        sigma = std::exp(detail::poly(c6, ln_n));
    }
    res.p_value = std::clamp(normal_sf((y - mu) / sigma), 0.0, 1.0);
    return res;
}

inline SwResult shapiro_wilk(const std::vector<double>& x) {
    return shapiro_wilk(std::span<const double>(x));
}

}  // namespace econkit
