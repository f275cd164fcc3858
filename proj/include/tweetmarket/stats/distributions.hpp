#pragma once

namespace tweetmarket::stats {

// Cumulative distribution and survival functions. Survival functions are
// computed directly (not as 1 - cdf) so small tail probabilities keep precision.
// Degrees of freedom must be >= 1, otherwise ValidationError.

double normal_cdf(double z);
double normal_sf(double z);

double chi2_cdf(double x, double dof);
double chi2_sf(double x, double dof);

double f_cdf(double x, double dof1, double dof2);
double f_sf(double x, double dof1, double dof2);

}  // namespace tweetmarket::stats
