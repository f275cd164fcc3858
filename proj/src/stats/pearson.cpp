#include "tweetmarket/stats/pearson.hpp"

#include <algorithm>
#include <cmath>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::stats {

double mean(std::span<const double> x) {
    if (x.empty()) throw EmptyInputError("mean of empty series");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("pearson: series lengths differ");
    if (x.size() < 3) throw EmptyInputError("pearson: need at least 3 observations");

    const double n = static_cast<double>(x.size());
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
        x2 += x[i] * x[i];
        y2 += y[i] * y[i];
    }
    // Relative floor: a constant series leaves only rounding noise in the centered sums.
    constexpr double kTiny = 1e-26;
    if (sxx <= kTiny * x2 || syy <= kTiny * y2 || sxx == 0.0 || syy == 0.0) {
        throw DegenerateInputError("pearson: series has zero variance");
    }
    const double cov = sxy / n;
    const double r = cov / std::sqrt((sxx / n) * (syy / n));
    return std::clamp(r, -1.0, 1.0);
}

}  // namespace tweetmarket::stats
