#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace tweetmarket::stats {

struct InformationCriteria {
    double aic = 0.0;
    double bic = 0.0;
    double fpe = 0.0;
    double hqic = 0.0;
};

/// VAR(p) with intercept: y_t = c + A_1 y_{t-1} + ... + A_p y_{t-p} + u_t, fitted by
/// equation-wise least squares.
struct VarModel {
    std::size_t order = 0;
    std::size_t dimension = 0;
    std::size_t observations = 0;  // rows used in the regression
    std::vector<Eigen::MatrixXd> lag_coefficients;  // A_1..A_p, each dim x dim
    Eigen::VectorXd intercept;
    Eigen::MatrixXd residuals;      // observations x dim
    Eigen::MatrixXd sigma_u;        // residual covariance, dof-corrected (T - dim*p - 1)
    Eigen::MatrixXd sigma_u_mle;    // residual covariance / T
    InformationCriteria criteria;
};

/// Fits VAR(order) to `data` (rows = time, columns = variables), skipping the first
/// `skip` rows of regression targets in addition to the `order` presample rows.
/// Criteria definitions: with T regression rows, k variables, m = k*p + 1 per equation,
/// ld = log det(sigma_u_mle) and P = p*k^2 + k free parameters:
///   AIC = ld + 2P/T, BIC = ld + ln(T) P/T, HQIC = ld + 2 ln(ln T) P/T,
///   FPE = ((T + m)/(T - m))^k exp(ld).
VarModel fit_var(const Eigen::MatrixXd& data, std::size_t order, std::size_t skip = 0);

struct OrderSelection {
    std::size_t aic = 1;
    std::size_t bic = 1;
    std::size_t fpe = 1;
    std::size_t hqic = 1;
    /// Majority vote of the four criteria; ties go to the smaller order.
    std::size_t chosen = 1;
    std::vector<InformationCriteria> by_order;  // index p-1
};

/// Evaluates p = 1..max_order on a common sample (the first max_order rows are presample
/// for every candidate). Requires T - max_order >= dim*max_order + 2.
OrderSelection var_select_order(const Eigen::MatrixXd& data, std::size_t max_order);

}  // namespace tweetmarket::stats
