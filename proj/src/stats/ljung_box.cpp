#include "tweetmarket/stats/ljung_box.hpp"

#include <string>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/stats/distributions.hpp"
#include "tweetmarket/stats/pearson.hpp"

namespace tweetmarket::stats {

namespace {

double sum_sq_dev(std::span<const double> x, double m) {
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s;
}

double lag_product(std::span<const double> x, double m, std::size_t k) {
    double s = 0.0;
    for (std::size_t t = k; t < x.size(); ++t) s += (x[t] - m) * (x[t - k] - m);
    return s;
}

}  // namespace

double autocorrelation(std::span<const double> x, std::size_t k) {
    if (x.size() <= k) throw ValidationError("autocorrelation: lag exceeds series length");
    const double m = mean(x);
    const double denom = sum_sq_dev(x, m);
    if (denom == 0.0) throw DegenerateInputError("autocorrelation: constant series");
    return lag_product(x, m, k) / denom;
}

TestReport ljung_box(std::span<const double> residuals, std::size_t lags, double level) {
    const std::size_t n = residuals.size();
    if (lags < 1) throw ValidationError("ljung_box: lags must be >= 1");
    if (n <= lags + 1) {
        throw ValidationError("ljung_box: series of length " + std::to_string(n) +
                              " too short for " + std::to_string(lags) + " lags");
    }
    const double m = mean(residuals);
    const double denom = sum_sq_dev(residuals, m);
    if (denom == 0.0) throw DegenerateInputError("ljung_box: constant series");

    const double dn = static_cast<double>(n);
    double q = 0.0;
    for (std::size_t k = 1; k <= lags; ++k) {
        const double r = lag_product(residuals, m, k) / denom;
        q += r * r / (dn - static_cast<double>(k));
    }
    q *= dn * (dn + 2.0);

    TestReport report;
    report.test = "ljung_box";
    report.statistic = q;
    report.p_value = chi2_sf(q, static_cast<double>(lags));
    report.level = level;
    report.reject = *report.p_value < level;
    return report;
}

}  // namespace tweetmarket::stats
