#pragma once

// OLS estimation and classical inference. The solver uses a column-pivoted
// Householder QR; rank is checked on the singular values of the
// column-normalized design so that badly scaled regressors (index points
// next to log-money increments) do not slip through as spurious fits.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "econkit/distributions.hpp"
#include "econkit/errors.hpp"
#include "econkit/timeseries.hpp"

namespace econkit {

struct RegressionSpec {
    std::string dependent;
    std::vector<std::string> regressors;
    bool include_intercept = true;
};

/// T×k design matrix. When an intercept is present it is always column 0.
class DesignMatrix {
public:
    DesignMatrix(Eigen::MatrixXd entries, bool has_intercept,
                 std::vector<std::string> column_names = {})
        : entries_(std::move(entries)),
          has_intercept_(has_intercept),
          names_(std::move(column_names)) {
        const auto T = entries_.rows();
        const auto k = entries_.cols();
        if (k == 0) throw DimensionMismatch("design matrix has no columns");
        if (T <= k)
            throw TooFewObservations("need more observations (" + std::to_string(T) +
                                     ") than regressors (" + std::to_string(k) + ")");
        if (!entries_.allFinite()) throw DataError("design matrix has non-finite entries");
        if (names_.empty()) {
            names_.reserve(static_cast<std::size_t>(k));
            for (Eigen::Index j = 0; j < k; ++j)
                names_.push_back(j == 0 && has_intercept_ ? "(Intercept)"
                                                          : "x" + std::to_string(j));
        }
        if (names_.size() != static_cast<std::size_t>(k))
            throw DimensionMismatch("design matrix column name count mismatch");
        for (Eigen::Index j = has_intercept_ ? 1 : 0; j < k; ++j) {
            const double lo = entries_.col(j).minCoeff();
            const double hi = entries_.col(j).maxCoeff();
            if (lo == hi) throw ZeroVariance(names_[static_cast<std::size_t>(j)]);
        }
    }

    const Eigen::MatrixXd& entries() const { return entries_; }
    bool has_intercept() const { return has_intercept_; }
    const std::vector<std::string>& column_names() const { return names_; }
    Eigen::Index rows() const { return entries_.rows(); }
    Eigen::Index cols() const { return entries_.cols(); }

private:
    Eigen::MatrixXd entries_;
    bool has_intercept_;
    std::vector<std::string> names_;
};

enum class CovarianceKind { classical, newey_west };

struct FitResult {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd residuals;
    Eigen::MatrixXd covariance;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd t_values;
    Eigen::VectorXd p_values;
    std::vector<std::string> names;
    Eigen::Index nobs = 0;
    Eigen::Index df_resid = 0;
    double r_squared = 0.0;
    bool has_intercept = true;
    CovarianceKind covariance_kind = CovarianceKind::classical;
    int hac_lag = -1;  // meaningful only for newey_west
};

namespace detail {

/// Smallest/largest singular value ratio of the column-normalized design.
inline void check_rank(const Eigen::MatrixXd& X) {
    Eigen::MatrixXd scaled = X;
    for (Eigen::Index j = 0; j < scaled.cols(); ++j) {
        const double norm = scaled.col(j).norm();
        if (norm == 0.0) throw RankDeficient("design column " + std::to_string(j) + " is zero");
        scaled.col(j) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-10 * sv(0))
        throw RankDeficient("design matrix is rank deficient (singular value ratio " +
                            std::to_string(sv(sv.size() - 1) / sv(0)) + ")");
}

/// (X'X)^{-1} from the thin QR factor: X P = Q R  =>  (X'X)^{-1} = P R^{-1} R^{-T} P'.
inline Eigen::MatrixXd xtx_inverse(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr,
                                   Eigen::Index k) {
    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    Eigen::MatrixXd M = Rinv * Rinv.transpose();
    const auto& P = qr.colsPermutation();
    return P * M * P.transpose();
}

/// Fill std_errors / t / p from a covariance matrix. Exact-fit designs can
/// produce zero standard errors; those are rendered as infinite t and zero
/// p rather than NaN.
inline void fill_inference(FitResult& fit) {
    const auto k = fit.coefficients.size();
    fit.std_errors.resize(k);
    fit.t_values.resize(k);
    fit.p_values.resize(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        double v = fit.covariance(i, i);
        if (v < 0.0 && v >= -1e-12) v = 0.0;
        if (v < 0.0) throw NegativeDiagonal(static_cast<std::size_t>(i), v);
        const double se = std::sqrt(v);
        fit.std_errors(i) = se;
        const double b = fit.coefficients(i);
        if (se > 0.0) {
            fit.t_values(i) = b / se;
            fit.p_values(i) = p_value_two_sided(fit.t_values(i), static_cast<int>(fit.df_resid));
        } else if (b == 0.0) {
            fit.t_values(i) = 0.0;
            fit.p_values(i) = 1.0;
        } else {
            fit.t_values(i) = b > 0.0 ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
            fit.p_values(i) = 0.0;
        }
    }
}

}  // namespace detail

/// OLS fit on an explicit design matrix. Classical covariance
/// s^2 (X'X)^{-1} with s^2 = RSS / (T - k).
inline FitResult fit_ols(const DesignMatrix& design, const Eigen::VectorXd& y) {
    const Eigen::MatrixXd& X = design.entries();
    const auto T = X.rows();
    const auto k = X.cols();
    if (y.size() != T)
        throw DimensionMismatch("y has " + std::to_string(y.size()) + " rows, design has " +
                                std::to_string(T));
    if (!y.allFinite()) throw DataError("dependent variable has non-finite entries");
    if (T <= k) throw TooFewObservations("T must exceed k");
    detail::check_rank(X);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    FitResult fit;
    fit.coefficients = qr.solve(y);
    fit.residuals = y - X * fit.coefficients;
    fit.names = design.column_names();
    fit.nobs = T;
    fit.df_resid = T - k;
    fit.has_intercept = design.has_intercept();
    fit.covariance_kind = CovarianceKind::classical;

    const double rss = fit.residuals.squaredNorm();
    double tss;
    if (design.has_intercept()) {
        const double mean = y.mean();
        tss = (y.array() - mean).matrix().squaredNorm();
    } else {
        tss = y.squaredNorm();
    }
    if (tss == 0.0)
        throw DegenerateDependent("dependent variable has zero total sum of squares");
    fit.r_squared = 1.0 - rss / tss;

    const double s2 = rss / static_cast<double>(fit.df_resid);
    fit.covariance = s2 * detail::xtx_inverse(qr, k);
    fit.covariance = 0.5 * (fit.covariance + fit.covariance.transpose()).eval();
    detail::fill_inference(fit);
    return fit;
}

/// Build the design matrix for a frame-level regression. The intercept,
/// when requested, is column 0.
inline DesignMatrix build_design(const Frame& f, const RegressionSpec& spec) {
    if (spec.regressors.empty()) throw DataError("regression needs at least one regressor");
    for (std::size_t i = 0; i < spec.regressors.size(); ++i) {
        if (spec.regressors[i] == spec.dependent)
            throw DataError("dependent variable \"" + spec.dependent + "\" is also a regressor");
        for (std::size_t j = i + 1; j < spec.regressors.size(); ++j)
            if (spec.regressors[i] == spec.regressors[j]) throw DuplicateName(spec.regressors[i]);
    }
    const auto T = static_cast<Eigen::Index>(f.n_rows());
    const auto base = spec.include_intercept ? 1 : 0;
    const auto k = static_cast<Eigen::Index>(spec.regressors.size()) + base;
    Eigen::MatrixXd X(T, k);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    if (spec.include_intercept) {
        X.col(0).setOnes();
        names.push_back("(Intercept)");
    }
    for (std::size_t j = 0; j < spec.regressors.size(); ++j) {
        const Series& s = f.column(spec.regressors[j]);
        for (Eigen::Index t = 0; t < T; ++t)
            X(t, base + static_cast<Eigen::Index>(j)) = s[static_cast<std::size_t>(t)];
        names.push_back(spec.regressors[j]);
    }
    return DesignMatrix(std::move(X), spec.include_intercept, std::move(names));
}

inline FitResult fit_ols(const Frame& f, const RegressionSpec& spec) {
    const Series& dep = f.column(spec.dependent);
    Eigen::VectorXd y(static_cast<Eigen::Index>(dep.size()));
    for (std::size_t t = 0; t < dep.size(); ++t) y(static_cast<Eigen::Index>(t)) = dep[t];
    return fit_ols(build_design(f, spec), y);
}

/// Recompute t statistics from a fit; errors on zero standard errors
/// instead of producing infinities.
inline Eigen::VectorXd t_statistics(const FitResult& fit) {
    Eigen::VectorXd t(fit.coefficients.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        if (!(fit.std_errors(i) > 0.0)) throw ZeroStandardError(static_cast<std::size_t>(i));
        t(i) = fit.coefficients(i) / fit.std_errors(i);
    }
    return t;
}

/// 1 - RSS/TSS recomputed from first principles; TSS centered iff the fit
/// included an intercept.
inline double r_squared(const FitResult& fit, const Eigen::VectorXd& y) {
    if (y.size() != fit.nobs) throw DimensionMismatch("y length does not match fit");
    const double rss = fit.residuals.squaredNorm();
    double tss;
    if (fit.has_intercept) {
        const double mean = y.mean();
        tss = (y.array() - mean).matrix().squaredNorm();
    } else {
        tss = y.squaredNorm();
    }
    if (tss == 0.0) throw DegenerateDependent("dependent variable has zero total sum of squares");
    return 1.0 - rss / tss;
}

}  // namespace econkit
