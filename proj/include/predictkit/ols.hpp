#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <string>
#include <vector>

#include "predictkit/error.hpp"

namespace predictkit {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// One fitted regression. Column 0 of the design is the intercept.
template <typename Scalar>
struct RegressionFit {
    Scalar intercept{0};
    VectorX<Scalar> slopes;
    /// Newey-West t-statistics, one per slope. Empty until newey_west_t is applied.
    VectorX<Scalar> hac_t;
    Scalar r_squared{0};
    Eigen::Index n_obs = 0;
    int start_year = 0;
    int end_year = 0;
    VectorX<Scalar> residuals;
    int nw_lags = -1;
    std::vector<std::string> warnings;

    VectorX<Scalar> coefficients() const {
        VectorX<Scalar> beta(slopes.size() + 1);
        beta << intercept, slopes;
        return beta;
    }
};

/// Least squares of y on X, where X already carries the intercept column.
///
/// Throws SampleSizeError unless rows > columns and SingularityError when X is rank
/// deficient. R^2 is 1 - SSR/SST around the mean of y; a constant y gives R^2 = 0.
template <typename DerivedY, typename DerivedX>
RegressionFit<typename DerivedY::Scalar> ols(const Eigen::MatrixBase<DerivedY>& y,
                                             const Eigen::MatrixBase<DerivedX>& X) {
    using Scalar = typename DerivedY::Scalar;
    const Eigen::Index n = X.rows();
    const Eigen::Index k = X.cols();
    if (y.size() != n) throw DataError("ols: response and design row counts differ");
    if (n <= k) {
        throw SampleSizeError("ols: " + std::to_string(n) + " observations for " + std::to_string(k) +
                              " coefficients");
    }

    const MatrixX<Scalar> design = X;
    Eigen::ColPivHouseholderQR<MatrixX<Scalar>> qr(design);
    qr.setThreshold(Eigen::NumTraits<Scalar>::dummy_precision());
    if (qr.rank() < k) throw SingularityError("ols: design matrix is rank deficient");

    const VectorX<Scalar> beta = qr.solve(y.derived().template cast<Scalar>());

    RegressionFit<Scalar> fit;
    fit.intercept = beta(0);
    fit.slopes = beta.tail(k - 1);
    fit.residuals = y - design * beta;
    fit.n_obs = n;

    const Scalar ssr = fit.residuals.squaredNorm();
    const Scalar sst = (y.array() - y.mean()).matrix().squaredNorm();
    fit.r_squared = sst > Scalar(0) ? std::clamp(Scalar(1) - ssr / sst, Scalar(0), Scalar(1)) : Scalar(0);
    return fit;
}

}  // namespace predictkit
