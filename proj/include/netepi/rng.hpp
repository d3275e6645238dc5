#pragma once
// Deterministic RNG utilities. All randomness flows from a single master seed;
// sub-streams are derived by mixing (master_seed, purpose tag, index) so that
// results are independent of thread count and execution order.
//
// Samplers are implemented here rather than taken from <random> distributions
// so that sampled values depend only on the engine's bit stream, not on
// standard-library internals.

#include <cstdint>
#include <random>
#include <string_view>
#include <cmath>
#include <vector>
#include <stdexcept>

namespace netepi {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) { h ^= c; h *= 0x100000001b3ULL; }
    return h;
}

// Sub-seed for a (purpose, index) stream under a master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ fnv1a(tag)) ^ splitmix64(index));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [0, n) by rejection (unbiased).
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n == 0");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % n;
    }

    // Uniform real in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Basic Box-Muller; the second variate is discarded for simplicity.
    double normal(double mean, double sd) {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sd * z;
    }

    // Truncated normal via rejection.
    double normal_truncated(double mean, double sd, double lo, double hi) {
        if (sd <= 0.0) return std::min(hi, std::max(lo, mean));
        for (;;) {
            double v = normal(mean, sd);
            if (v >= lo && v <= hi) return v;
        }
    }

    // Knuth multiplication method; fine for the lambdas used here (~14).
    int poisson(double lambda) {
        const double l = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        do { ++k; p *= uniform(); } while (p > l);
        return k - 1;
    }

    // Poisson conditioned on [lo, hi] by rejection.
    int poisson_in_range(double lambda, int lo, int hi) {
        for (;;) {
            int v = poisson(lambda);
            if (v >= lo && v <= hi) return v;
        }
    }

    // Sample k distinct indices from [0, n), in draw order.
    std::vector<int> sample_without_replacement(int n, int k);

private:
    std::mt19937_64 eng_;
};

inline std::vector<int> Rng::sample_without_replacement(int n, int k) {
    if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
    // Floyd's algorithm keeps this O(k) in memory.
    std::vector<int> out;
    out.reserve(k);
    std::vector<bool> seen(n, false);
    for (int j = n - k; j < n; ++j) {
        int t = static_cast<int>(uniform_index(static_cast<std::uint64_t>(j) + 1));
        if (seen[t]) t = j;
        seen[t] = true;
        out.push_back(t);
    }
    return out;
}

} // namespace netepi
