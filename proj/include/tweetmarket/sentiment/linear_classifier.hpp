#pragma once

#include <cstdint>
#include <vector>

#include "tweetmarket/sentiment/tfidf.hpp"

namespace tweetmarket::sentiment {

struct TrainOptions {
    double lambda = 1e-3;   // regularization constant
    int epochs = 50;        // passes over the distinct examples
    std::uint64_t seed = 1;

    void validate() const;
};

/// Linear decision function w.x + b. "Fires" means a decision value > 0.
struct LinearClassifier {
    std::vector<double> weights;
    double bias = 0.0;

    double decision(const SparseVector& x) const { return x.dot(weights) + bias; }
    bool fires(const SparseVector& x) const { return decision(x) > 0.0; }
};

/// Linear SVM (hinge loss, L2 penalty) trained in the primal by Pegasos stochastic
/// subgradient steps with projection onto the ball of radius 1/sqrt(lambda):
///   min lambda/2 (|w|^2 + b^2) + mean_i max(0, 1 - y_i (w.x_i + b)).
/// The bias is handled as a constant feature, so it is regularized too. Identical
/// (x, y) pairs are merged into one weighted example and sampled in proportion to their
/// weight; duplicating every example therefore gives the same classifier.
/// Labels are true for the positive side. Single-label data is allowed.
LinearClassifier train_linear(const std::vector<SparseVector>& x, const std::vector<bool>& y,
                              std::size_t dimension, const TrainOptions& options = {});

}  // namespace tweetmarket::sentiment
