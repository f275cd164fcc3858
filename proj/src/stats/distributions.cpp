#include "tweetmarket/stats/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::stats {

namespace {

void require_dof(double k, const char* name) {
    if (!(k >= 1.0) || !std::isfinite(k)) {
        throw ValidationError(std::string(name) + ": degrees of freedom must be >= 1");
    }
}

}  // namespace

double normal_cdf(double z) {
    if (std::isnan(z)) return z;
    return 0.5 * boost::math::erfc(-z / std::sqrt(2.0));
}

double normal_sf(double z) {
    if (std::isnan(z)) return z;
    return 0.5 * boost::math::erfc(z / std::sqrt(2.0));
}

double chi2_cdf(double x, double dof) {
    require_dof(dof, "chi2_cdf");
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return boost::math::gamma_p(dof / 2.0, x / 2.0);
}

double chi2_sf(double x, double dof) {
    require_dof(dof, "chi2_sf");
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

// F(x; d1, d2) = I_{d1 x / (d1 x + d2)}(d1/2, d2/2)
double f_cdf(double x, double dof1, double dof2) {
    require_dof(dof1, "f_cdf");
    require_dof(dof2, "f_cdf");
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double z = dof1 * x / (dof1 * x + dof2);
    return boost::math::ibeta(dof1 / 2.0, dof2 / 2.0, z);
}

double f_sf(double x, double dof1, double dof2) {
    require_dof(dof1, "f_sf");
    require_dof(dof2, "f_sf");
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    // Complement via the mirrored argument keeps precision in the upper tail.
    const double w = dof2 / (dof2 + dof1 * x);
    return boost::math::ibeta(dof2 / 2.0, dof1 / 2.0, w);
}

}  // namespace tweetmarket::stats
