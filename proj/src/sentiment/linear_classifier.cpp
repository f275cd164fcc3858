#include "tweetmarket/sentiment/linear_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/stats/random.hpp"

namespace tweetmarket::sentiment {

void TrainOptions::validate() const {
    if (!(lambda > 0)) throw ValidationError("lambda must be > 0");
    if (epochs < 1) throw ValidationError("epochs must be >= 1");
}

LinearClassifier train_linear(const std::vector<SparseVector>& x, const std::vector<bool>& y,
                              std::size_t dimension, const TrainOptions& options) {
    options.validate();
    if (x.size() != y.size()) throw ValidationError("feature and label counts differ");
    if (x.empty()) throw EmptyInputError("no training examples");

    // Merge identical (x, y) pairs, keeping first-occurrence order.
    struct Unique {
        const SparseVector* x;
        double sign;
        double weight;
    };
    std::vector<Unique> unique;
    std::map<std::pair<bool, std::vector<std::pair<std::uint32_t, double>>>, std::size_t> seen;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (const auto& [j, v] : x[i].entries) {
            if (j >= dimension) throw ValidationError("feature index outside the dimension");
        }
        const auto [it, inserted] = seen.emplace(std::make_pair(bool(y[i]), x[i].entries), unique.size());
        if (inserted) {
            unique.push_back({&x[i], y[i] ? 1.0 : -1.0, 1.0});
        } else {
            unique[it->second].weight += 1.0;
        }
    }
    std::vector<double> cumulative;
    double total = 0;
    for (const auto& u : unique) cumulative.push_back(total += u.weight);

    // w = scale * v, with the bias as coordinate `dimension`.
    const double lambda = options.lambda;
    const double radius = 1.0 / std::sqrt(lambda);
    std::vector<double> v(dimension + 1, 0.0);
    double scale = 1.0;
    double v_norm2 = 0.0;
    stats::Rng rng(options.seed);
    const auto steps = static_cast<std::uint64_t>(options.epochs) * unique.size();
    for (std::uint64_t t = 1; t <= steps; ++t) {
        const double target = rng.uniform() * total;
        const auto k = std::size_t(std::upper_bound(cumulative.begin(), cumulative.end(), target) - cumulative.begin());
        const Unique& ex = unique[std::min(k, unique.size() - 1)];
        const double vx = ex.x->dot(v) + v[dimension];
        const double margin = ex.sign * scale * vx;
        const double eta = 1.0 / (lambda * double(t));
        scale *= 1.0 - 1.0 / double(t);
        if (margin < 1.0) {
            if (scale == 0.0) {
                std::fill(v.begin(), v.end(), 0.0);
                scale = 1.0;
                v_norm2 = 0.0;
            }
            const double c = eta * ex.sign / scale;
            double vdotx = 0;
            for (const auto& [j, val] : ex.x->entries) vdotx += v[j] * val;
            vdotx += v[dimension];
            const double x_norm2 = ex.x->squared_norm() + 1.0;
            for (const auto& [j, val] : ex.x->entries) v[j] += c * val;
            v[dimension] += c;
            v_norm2 += 2.0 * c * vdotx + c * c * x_norm2;
        }
        if (t % unique.size() == 0) {
            v_norm2 = 0.0;
            for (double vi : v) v_norm2 += vi * vi;
        }
        const double norm = scale * std::sqrt(std::max(v_norm2, 0.0));
        if (norm > radius) scale *= radius / norm;
        if (scale < 1e-100 && scale != 0.0) {
            for (auto& vi : v) vi *= scale;
            v_norm2 *= scale * scale;
            scale = 1.0;
        }
    }
    LinearClassifier out;
    out.weights.resize(dimension);
    for (std::size_t j = 0; j < dimension; ++j) out.weights[j] = scale * v[j];
    out.bias = scale * v[dimension];
    return out;
}

}  // namespace tweetmarket::sentiment
