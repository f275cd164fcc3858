#include "tweetmarket/stats/ols.hpp"

#include <cmath>
#include <string>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::stats {

OlsFit ols(std::span<const double> y, const Eigen::MatrixXd& design) {
    const auto n = static_cast<std::size_t>(design.rows());
    const auto k = static_cast<std::size_t>(design.cols());
    if (y.size() != n) throw ValidationError("ols: response and design row counts differ");
    if (k == 0) throw ValidationError("ols: design has no columns");
    if (n < k + 1) {
        throw EmptyInputError("ols: need at least " + std::to_string(k + 1) + " observations, got " +
                              std::to_string(n));
    }

    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(n));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    // Scale-aware rank threshold: rank loss shows up as a tiny trailing diagonal of R.
    qr.setThreshold(1e-10);
    if (static_cast<std::size_t>(qr.rank()) < k) {
        throw SingularMatrixError("ols: design matrix is rank deficient (rank " +
                                  std::to_string(qr.rank()) + " < " + std::to_string(k) + ")");
    }

    OlsFit fit;
    fit.observations = n;
    fit.parameters = k;
    fit.coefficients = qr.solve(yv);
    const Eigen::VectorXd resid = yv - design * fit.coefficients;
    fit.residuals.assign(resid.data(), resid.data() + resid.size());
    fit.ssr = resid.squaredNorm();
    fit.residual_variance = fit.ssr / static_cast<double>(n - k);

    // (X'X)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(static_cast<Eigen::Index>(k),
                                                         static_cast<Eigen::Index>(k))
                                  .triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv = r.triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
    const Eigen::MatrixXd xtx_inv_perm = r_inv * r_inv.transpose();
    const Eigen::MatrixXd xtx_inv =
        qr.colsPermutation() * xtx_inv_perm * qr.colsPermutation().transpose();
    fit.standard_errors = (xtx_inv.diagonal() * fit.residual_variance).cwiseSqrt();
    return fit;
}

Projection project(std::span<const double> y, const Eigen::MatrixXd& design) {
    if (static_cast<Eigen::Index>(y.size()) != design.rows()) {
        throw ValidationError("project: response and design row counts differ");
    }
    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), design.rows());
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    cod.setThreshold(1e-10);
    const Eigen::VectorXd resid = yv - design * cod.solve(yv);
    Projection out;
    out.residuals.assign(resid.data(), resid.data() + resid.size());
    out.ssr = resid.squaredNorm();
    out.rank = static_cast<std::size_t>(cod.rank());
    return out;
}

OlsFit ols_with_intercept(std::span<const double> y,
                          const std::vector<std::span<const double>>& regressors) {
    const auto n = static_cast<Eigen::Index>(y.size());
    Eigen::MatrixXd design(n, static_cast<Eigen::Index>(regressors.size() + 1));
    design.col(0).setOnes();
    for (std::size_t j = 0; j < regressors.size(); ++j) {
        if (regressors[j].size() != y.size()) {
            throw ValidationError("ols: regressor " + std::to_string(j) + " has wrong length");
        }
        design.col(static_cast<Eigen::Index>(j + 1)) =
            Eigen::Map<const Eigen::VectorXd>(regressors[j].data(), n);
    }
    return ols(y, design);
}

}  // namespace tweetmarket::stats
