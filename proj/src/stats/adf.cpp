#include "tweetmarket/stats/adf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/stats/ols.hpp"

namespace tweetmarket::stats {

namespace {

// Dickey-Fuller tau_mu percentiles; rows follow kSampleSizes (0 = infinity).
constexpr std::array<double, 6> kSampleSizes{25, 50, 100, 250, 500, 0};
constexpr std::array<double, 4> kLevels{0.01, 0.025, 0.05, 0.10};
constexpr double kTable[6][4] = {
    {-3.75, -3.33, -3.00, -2.63},
    {-3.58, -3.22, -2.93, -2.60},
    {-3.51, -3.17, -2.89, -2.58},
    {-3.46, -3.14, -2.88, -2.57},
    {-3.44, -3.13, -2.87, -2.57},
    {-3.43, -3.12, -2.86, -2.57},
};

std::size_t level_column(double level) {
    for (std::size_t j = 0; j < kLevels.size(); ++j) {
        if (std::abs(level - kLevels[j]) < 1e-12) return j;
    }
    throw ValidationError("adf: unsupported significance level " + std::to_string(level));
}

struct Regression {
    double statistic = 0.0;
    double aic = 0.0;
    std::size_t nobs = 0;
};

// Regress dx_t on [1, x_{t-1}, dx_{t-1..t-p}] for t in [first_t, n-1] (t indexes x).
Regression adf_regression(std::span<const double> x, std::size_t p, std::size_t first_t) {
    const std::size_t n = x.size();
    const std::size_t nobs = n - first_t;
    const auto rows = static_cast<Eigen::Index>(nobs);
    Eigen::MatrixXd design(rows, static_cast<Eigen::Index>(p + 2));
    std::vector<double> y(nobs);
    for (std::size_t r = 0; r < nobs; ++r) {
        const std::size_t t = first_t + r;
        const auto ri = static_cast<Eigen::Index>(r);
        y[r] = x[t] - x[t - 1];
        design(ri, 0) = 1.0;
        design(ri, 1) = x[t - 1];
        for (std::size_t j = 1; j <= p; ++j) {
            design(ri, static_cast<Eigen::Index>(j + 1)) = x[t - j] - x[t - j - 1];
        }
    }
    const OlsFit fit = ols(y, design);
    Regression out;
    out.nobs = nobs;
    const double se = fit.standard_errors[1];
    out.statistic = se > 0.0 ? fit.coefficients[1] / se
                             : -std::numeric_limits<double>::infinity();
    const double dn = static_cast<double>(nobs);
    out.aic = dn * std::log(std::max(fit.ssr, std::numeric_limits<double>::min()) / dn) +
              2.0 * static_cast<double>(p + 2);
    return out;
}

}  // namespace

std::size_t schwert_max_lag(std::size_t n) {
    return static_cast<std::size_t>(
        std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

double adf_critical_value(std::size_t observations, double level) {
    const std::size_t col = level_column(level);
    if (observations == 0) throw ValidationError("adf: zero observations");
    const double inv_n = 1.0 / static_cast<double>(observations);
    auto inv = [](double size) { return size == 0 ? 0.0 : 1.0 / size; };
    // Rows ordered by decreasing 1/n; locate the bracketing segment.
    std::size_t hi = 0;
    while (hi + 1 < kSampleSizes.size() && inv(kSampleSizes[hi + 1]) >= inv_n) ++hi;
    if (hi + 1 == kSampleSizes.size()) return kTable[hi][col];
    // Below n = 25 the first segment is extended linearly.
    const std::size_t lo = hi + 1;
    const double x0 = inv(kSampleSizes[hi]);
    const double x1 = inv(kSampleSizes[lo]);
    const double w = (inv_n - x1) / (x0 - x1);
    return kTable[lo][col] + w * (kTable[hi][col] - kTable[lo][col]);
}

AdfResult adf_test(std::span<const double> x, std::size_t max_lag, double level) {
    level_column(level);
    const std::size_t n = x.size();
    if (n < max_lag + 10) {
        throw ValidationError("adf: series of length " + std::to_string(n) +
                              " too short for max_lag " + std::to_string(max_lag));
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi) throw DegenerateInputError("adf: constant series");
    bool constant_diff = true;
    for (std::size_t t = 2; t < n && constant_diff; ++t) {
        constant_diff = (x[t] - x[t - 1]) == (x[1] - x[0]);
    }
    if (constant_diff) throw DegenerateInputError("adf: series has constant increments");

    std::size_t best_p = 0;
    double best_aic = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p <= max_lag; ++p) {
        const Regression reg = adf_regression(x, p, max_lag + 1);
        if (reg.aic < best_aic) {
            best_aic = reg.aic;
            best_p = p;
        }
    }
    const Regression final_reg = adf_regression(x, best_p, best_p + 1);

    AdfResult out;
    out.lags_used = best_p;
    out.observations = final_reg.nobs;
    out.report.test = "adf";
    out.report.statistic = final_reg.statistic;
    out.report.level = level;
    out.report.critical_value = adf_critical_value(final_reg.nobs, level);
    out.report.reject = final_reg.statistic < *out.report.critical_value;
    return out;
}

AdfResult adf_test_auto(std::span<const double> x, double level) {
    std::size_t max_lag = schwert_max_lag(x.size());
    if (x.size() < 10) throw ValidationError("adf: series shorter than 10 observations");
    max_lag = std::min(max_lag, x.size() - 10);
    return adf_test(x, max_lag, level);
}

}  // namespace tweetmarket::stats
