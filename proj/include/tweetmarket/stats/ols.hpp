#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

namespace tweetmarket::stats {

struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    std::vector<double> residuals;
    double ssr = 0.0;
    /// Unbiased: ssr / (n - k). For the two-parameter market model this is 1/(L-2).
    double residual_variance = 0.0;
    std::size_t observations = 0;
    std::size_t parameters = 0;

    std::size_t dof() const { return observations - parameters; }
};

/// Least squares of y on the columns of `design` (no intercept added).
/// Requires rows >= columns + 1; throws SingularMatrixError if `design` is rank deficient.
OlsFit ols(std::span<const double> y, const Eigen::MatrixXd& design);

/// Residuals of the least-squares projection of y onto the column space of `design`.
/// Unlike ols(), rank-deficient designs are accepted: residuals stay well defined.
struct Projection {
    std::vector<double> residuals;
    double ssr = 0.0;
    std::size_t rank = 0;
};
Projection project(std::span<const double> y, const Eigen::MatrixXd& design);

/// Least squares with a leading intercept column followed by `regressors`.
/// coefficients[0] is the intercept, coefficients[j + 1] the slope of regressors[j].
OlsFit ols_with_intercept(std::span<const double> y,
                          const std::vector<std::span<const double>>& regressors);

}  // namespace tweetmarket::stats
