#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace tweetmarket::stats {

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random stream, bit-reproducible across platforms.
///
/// Engine: std::mt19937_64 (output sequence fixed by the C++ standard).
/// uniform(): top 53 bits of one draw scaled by 2^-53, in [0, 1).
/// normal(): Marsaglia polar method on pairs of uniform() draws mapped to (-1, 1);
///           the second variate of each accepted pair is cached.
/// below(n): rejection sampling on the raw 64-bit output (no modulo bias).
/// The std:: distribution classes are avoided because their algorithms are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream `index` derived from a base seed; distinct indices give independent streams.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed + splitmix64(index)));
    }

    std::uint64_t next_u64() { return engine_(); }
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }
    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace tweetmarket::stats
