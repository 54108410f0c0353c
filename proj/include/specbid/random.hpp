#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>

namespace specbid {

// SplitMix64 finalizer. Used to derive independent stream seeds; adding more
// derived streams (or replications) never perturbs the earlier ones.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    return splitmix64(splitmix64(master) + tag);
}

// Deterministic random stream. All distributions are generated from raw
// mt19937_64 output with fixed arithmetic, so a given seed reproduces the
// same sequence on every build.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (cosine branch only, no cached state).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Unit-mean exponential.
    double exponential() { return -std::log(1.0 - uniform()); }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, n), bias-free via rejection.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: empty range");
        const std::uint64_t un = n;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % un;
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return static_cast<std::size_t>(r % un);
    }

    // Draw an index from a probability vector (assumed to sum to ~1).
    std::size_t sample(std::span<const double> probs) {
        if (probs.empty()) throw std::invalid_argument("sample: empty distribution");
        const double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return i;
        }
        return probs.size() - 1;  // fp slack in the cumulative sum
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace specbid
