#include "tweetmarket/stats/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/stats/distributions.hpp"

namespace tweetmarket::stats {

double kolmogorov_sf(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16 * std::abs(sum)) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestReport ks_test(std::span<const double> sample, const std::function<double(double)>& cdf,
                   double level) {
    if (sample.empty()) throw EmptyInputError("ks_test: empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    const double sn = std::sqrt(n);
    TestReport report;
    report.test = "kolmogorov_smirnov";
    report.statistic = d;
    report.p_value = kolmogorov_sf((sn + 0.12 + 0.11 / sn) * d);
    report.level = level;
    report.reject = *report.p_value < level;
    return report;
}

TestReport ks_test_standard_normal(std::span<const double> sample, double level) {
    return ks_test(sample, [](double z) { return normal_cdf(z); }, level);
}

}  // namespace tweetmarket::stats
