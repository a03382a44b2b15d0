#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dts {

// Deterministic RNG stream. Gaussian and bounded-integer draws are
// hand-rolled so that traces are bit-identical regardless of the standard
// library's distribution implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed_seq(seed, 0)) {}
    RngStream(std::uint64_t seed, std::uint64_t salt) : engine_(seed_seq(seed, salt)) {}

    // Child stream derived from (seed, salt); independent of draws made on this stream.
    static RngStream split(std::uint64_t master_seed, std::uint64_t salt) {
        return RngStream(master_seed, salt);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform index in [0, n); rejection sampling, no modulo bias.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return static_cast<std::size_t>(v % n);
    }

    // Standard normal via Box-Muller.
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    static std::mt19937_64 seed_seq(std::uint64_t seed, std::uint64_t salt) {
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
        return std::mt19937_64(sq);
    }

    std::mt19937_64 engine_;
};

}  // namespace dts
