#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qflow {

/// SplitMix64 generator. split() derives an independent stream, so stochastic
/// steps can be seeded from a single user seed without sharing state.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    Rng split() { return Rng(next() ^ 0xD1B54A32D192ED03ULL); }

    /// Uniform in [0, 1).
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    double normal() {
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::complex<double> complex_normal() { return {normal(), normal()}; }

    /// Uniform in the closed unit disk.
    std::complex<double> unit_disk() {
        double r = std::sqrt(uniform());
        return std::polar(r, 6.283185307179586 * uniform());
    }

private:
    std::uint64_t state_;
};

}  // namespace qflow
