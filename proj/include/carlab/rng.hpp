#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

namespace carlab {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// engines so that seeded runs produce identical streams on every platform,
/// which golden-file and worker-count determinism tests rely on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (no caching; one value per call).
    double gaussian() noexcept {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform direction on the unit sphere in R^n (normalised Gaussian draw).
    Eigen::VectorXd unit_sphere(Eigen::Index n) {
        Eigen::VectorXd v(n);
        double norm2 = 0.0;
        do {
            for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian();
            norm2 = v.squaredNorm();
        } while (norm2 == 0.0);
        return v / std::sqrt(norm2);
    }

private:
    std::uint64_t state_;
};

/// Per-task seed derivation: hash of (master seed, task index). Tasks seeded
/// this way can run on any worker without changing the sampled stream.
[[nodiscard]] inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    SplitMix64 mix(master + 0x9E3779B97F4A7C15ULL * (index + 1));
    return mix.next();
}

}  // namespace carlab
