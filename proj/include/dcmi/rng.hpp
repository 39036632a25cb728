#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace dcmi {

// SplitMix64 finalizer. Used to whiten seeds and to derive independent
// sub-streams; the rule below is part of the reproducibility contract and is
// documented in the README.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Stream-split rule: stream `index` of a base seed. Nest calls to derive
/// multi-dimensional stream trees (grid point -> replicate, etc.).
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(index));
}

/// Seeded random stream: mt19937_64 plus hand-rolled variate transforms so
/// that sequences are identical across standard library implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    /// Standard normal via Box-Muller (consumes two uniforms per call).
    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Exponential with the given scale (mean), via inverse CDF.
    double exponential(double scale) {
        return -scale * std::log1p(-uniform01());
    }

    /// Index drawn from the given probability vector (assumed to sum to 1).
    int categorical(std::span<const double> probs) {
        const double u = uniform01();
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < probs.size(); ++k) {
            acc += probs[k];
            if (u < acc) return static_cast<int>(k);
        }
        return static_cast<int>(probs.size()) - 1;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace dcmi
