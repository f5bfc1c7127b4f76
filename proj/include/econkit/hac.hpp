#pragma once

// Newey-West heteroskedasticity-and-autocorrelation-consistent covariance
// for OLS coefficients, with Bartlett kernel weights.
//
//   V = (X'X)^{-1} Omega (X'X)^{-1}
//   Omega = sum_t x_t x_t' e_t^2
//         + sum_{l=1..L} w_l sum_{t=l+1..T} (x_t x_{t-l}' + x_{t-l} x_t') e_t e_{t-l}
//   w_l = 1 - l/(L+1)
//
// Two scaling modes exist: `standard_sandwich` is the form above, which is
// what mainstream statistical software reports; `paper_formula` additionally
// multiplies by 1/T, a variant that appears in some textbook presentations.
// The 1/T factor shrinks standard errors by roughly sqrt(T) and will not
// match software output, so the default is standard_sandwich.

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "econkit/errors.hpp"
#include "econkit/linreg.hpp"

namespace econkit {

enum class HacScaling { paper_formula, standard_sandwich };

struct HacConfig {
    int lag_truncation = 4;  // L; must satisfy L < T-1 at use time
    HacScaling scaling = HacScaling::standard_sandwich;
    bool small_sample_adjust = false;  // multiply by T/(T-k)
};

/// Bartlett kernel weight for lag l under truncation L.
inline double bartlett_weight(int l, int L) {
    if (L < 0) throw LagOutOfRange("lag truncation must be non-negative");
    if (l < 1 || l > L)
        throw LagOutOfRange("lag " + std::to_string(l) + " outside [1, " + std::to_string(L) + "]");
    return 1.0 - static_cast<double>(l) / (static_cast<double>(L) + 1.0);
}

/// Automatic lag choice floor(4 (T/100)^{2/9}); offered as a convenience,
/// never applied implicitly.
inline int newey_west_auto_lag(Eigen::Index T) {
    return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(T) / 100.0, 2.0 / 9.0)));
}

/// HAC covariance of the OLS coefficients.
inline Eigen::MatrixXd newey_west_cov(const DesignMatrix& design,
                                      const Eigen::VectorXd& residuals,
                                      const HacConfig& cfg = {}) {
    const Eigen::MatrixXd& X = design.entries();
    const auto T = X.rows();
    const auto k = X.cols();
    if (residuals.size() != T)
        throw DimensionMismatch("residuals length " + std::to_string(residuals.size()) +
                                " does not match T = " + std::to_string(T));
    if (cfg.lag_truncation < 0) throw LagOutOfRange("lag truncation must be non-negative");
    if (cfg.lag_truncation >= T - 1)
        throw LagTooLarge("lag truncation " + std::to_string(cfg.lag_truncation) +
                          " must be below T-1 = " + std::to_string(T - 1));

    Eigen::MatrixXd omega = X.transpose() * residuals.array().square().matrix().asDiagonal() * X;
    for (int l = 1; l <= cfg.lag_truncation; ++l) {
        const double w = bartlett_weight(l, cfg.lag_truncation);
        Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(k, k);
        for (Eigen::Index t = l; t < T; ++t)
            gamma.noalias() += residuals(t) * residuals(t - l) * X.row(t).transpose() * X.row(t - l);
        omega.noalias() += w * (gamma + gamma.transpose());
    }

    const Eigen::MatrixXd xtx = X.transpose() * X;
    const Eigen::MatrixXd xtx_inv = xtx.ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    Eigen::MatrixXd v = xtx_inv * omega * xtx_inv;
    v = 0.5 * (v + v.transpose()).eval();
    // scale after symmetrizing so paper_formula output is standard/T exactly
    if (cfg.scaling == HacScaling::paper_formula) v /= static_cast<double>(T);
    if (cfg.small_sample_adjust) v *= static_cast<double>(T) / static_cast<double>(T - k);
    return v;
}

/// Square roots of the diagonal. Tiny negatives (>= -1e-12) are rounding
/// noise and clamp to zero; anything more negative signals a broken Omega.
inline Eigen::VectorXd robust_se(const Eigen::MatrixXd& V) {
    if (V.rows() != V.cols()) throw DimensionMismatch("covariance matrix must be square");
    Eigen::VectorXd se(V.rows());
    for (Eigen::Index i = 0; i < V.rows(); ++i) {
        double d = V(i, i);
        if (d < 0.0) {
            if (d < -1e-12) throw NegativeDiagonal(static_cast<std::size_t>(i), d);
            d = 0.0;
        }
        se(i) = std::sqrt(d);
    }
    return se;
}

/// Replace a fit's covariance (and the inference derived from it) with the
/// Newey-West one. Coefficients, residuals and R^2 are untouched.
inline FitResult refit_with_hac(const FitResult& fit, const DesignMatrix& design,
                                const HacConfig& cfg = {}) {
    if (fit.nobs != design.rows() || fit.coefficients.size() != design.cols())
        throw DimensionMismatch("fit does not match design dimensions");
    FitResult out = fit;
    out.covariance = newey_west_cov(design, fit.residuals, cfg);
    out.covariance_kind = CovarianceKind::newey_west;
    out.hac_lag = cfg.lag_truncation;
    detail::fill_inference(out);
    return out;
}

}  // namespace econkit
