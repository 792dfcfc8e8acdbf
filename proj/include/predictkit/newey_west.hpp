#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "predictkit/error.hpp"
#include "predictkit/ols.hpp"

namespace predictkit {

/// floor(4 (n/100)^(2/9)).
inline int newey_west_default_lags(Eigen::Index n) {
    return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));
}

/// Either a fixed lag count or the plug-in rule above.
struct LagRule {
    int fixed = -1;  // negative selects the plug-in rule

    int lags_for(Eigen::Index n) const { return fixed >= 0 ? fixed : newey_west_default_lags(n); }
};

/// Bartlett-weighted long-run covariance of the scores x_t e_t:
/// S = G0 + sum_{l=1..L} (1 - l/(L+1)) (G_l + G_l').
template <typename DerivedX, typename DerivedE>
MatrixX<typename DerivedX::Scalar> newey_west_meat(const Eigen::MatrixBase<DerivedX>& X,
                                                   const Eigen::MatrixBase<DerivedE>& residuals, int lags) {
    using Scalar = typename DerivedX::Scalar;
    const Eigen::Index n = X.rows();
    if (lags < 0 || lags >= n) throw DomainError("newey_west: lags must lie in [0, n_obs)");

    const MatrixX<Scalar> scores = X.derived().array().colwise() * residuals.derived().array();
    MatrixX<Scalar> S = scores.transpose() * scores;
    for (int l = 1; l <= lags; ++l) {
        const Scalar weight = Scalar(1) - Scalar(l) / Scalar(lags + 1);
        const MatrixX<Scalar> gamma =
            scores.bottomRows(n - l).transpose() * scores.topRows(n - l);
        S += weight * (gamma + gamma.transpose());
    }
    return S;
}

/// Sandwich covariance (X'X)^-1 S (X'X)^-1 with no degrees-of-freedom correction.
template <typename DerivedX, typename DerivedE>
MatrixX<typename DerivedX::Scalar> newey_west_covariance(const Eigen::MatrixBase<DerivedX>& X,
                                                         const Eigen::MatrixBase<DerivedE>& residuals,
                                                         int lags) {
    using Scalar = typename DerivedX::Scalar;
    const MatrixX<Scalar> xtx = X.transpose() * X;
    const MatrixX<Scalar> bread = xtx.ldlt().solve(MatrixX<Scalar>::Identity(xtx.rows(), xtx.cols()));
    return bread * newey_west_meat(X, residuals, lags) * bread;
}

/// HAC t-statistics for the slopes of `fit` (intercept excluded). Stores them with the lag
/// count on the fit and also returns them. Non-positive variances are clamped to the
/// smallest normal number and noted in fit.warnings.
template <typename Scalar, typename DerivedX>
VectorX<Scalar> newey_west_t(RegressionFit<Scalar>& fit, const Eigen::MatrixBase<DerivedX>& X, int lags) {
    const MatrixX<Scalar> cov = newey_west_covariance(X, fit.residuals, lags);
    const Eigen::Index k = fit.slopes.size();
    VectorX<Scalar> t(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        Scalar var = cov(j + 1, j + 1);
        if (!(var > Scalar(0))) {
            fit.warnings.push_back("newey_west: non-positive variance for slope " + std::to_string(j) +
                                   " clamped");
            var = std::numeric_limits<Scalar>::min();
        }
        t(j) = fit.slopes(j) / std::sqrt(var);
    }
    fit.hac_t = t;
    fit.nw_lags = lags;
    return t;
}

}  // namespace predictkit
