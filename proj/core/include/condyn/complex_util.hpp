#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace condyn {

using Complex = std::complex<double>;

/// Canonical representation of the point at infinity on the Riemann sphere.
inline Complex infinity() {
    return {std::numeric_limits<double>::infinity(), 0.0};
}

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool is_infinite(const Complex& z) { return !is_finite(z); }

inline double abs2(const Complex& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

/// Counter-based deterministic generator (splitmix64). Used wherever a
/// stochastic choice must be reproducible bit-for-bit from (seed, counter).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in {0, ..., n-1}, n >= 1.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next() % n);
    }
};

/// One value of a (seed, counter) keyed stream without carrying state.
inline std::uint64_t hash_counter(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 g(seed ^ (counter * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull));
    return g.next();
}

}  // namespace condyn
