#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace stitchcast {

/**
 * Deterministic random source. mt19937_64 output is fully specified by the
 * standard, and all transforms below are written out explicitly, so a seed
 * produces the same stream on every platform (std::*_distribution would not).
 */
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive, bias-free via rejection.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t u;
        do {
            u = next_u64();
        } while (u >= limit);
        return lo + static_cast<int64_t>(u % span);
    }

    /// Standard normal, Box-Muller (one value per call, no cached state).
    double normal() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Poisson sample by Knuth's product method; large means split in half so
    /// exp(-mu) stays representable.
    long long poisson(double mu) {
        if (mu < 0) throw std::invalid_argument("poisson: negative mean");
        if (mu == 0) return 0;
        if (mu > 500) return poisson(mu / 2) + poisson(mu - mu / 2);
        const double limit = std::exp(-mu);
        long long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    /// Index draw proportional to non-negative weights.
    size_t categorical(const std::vector<double>& weights) {
        double total = 0;
        for (double w : weights) total += w;
        if (total <= 0) throw std::invalid_argument("categorical: weights sum to zero");
        double r = uniform() * total;
        double acc = 0;
        for (size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (r < acc) return i;
        }
        return weights.size() - 1;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace stitchcast
