#pragma once

#include <span>

namespace tweetmarket::stats {

/// Pearson correlation of two equally long series (>= 3 points), computed as
/// (<xy> - <x><y>) / sqrt((<x^2> - <x>^2)(<y^2> - <y>^2)) with time averages <.>.
/// Deviations from the mean are accumulated explicitly, which is algebraically the same
/// quantity with less cancellation. Zero variance throws DegenerateInputError.
double pearson(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> x);

}  // namespace tweetmarket::stats
