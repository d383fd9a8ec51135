#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hh {

/// Derives an independent child seed from (seed, stream). Used for per-chunk
/// seed derivation so chunked sampling is reproducible regardless of how the
/// chunks are scheduled.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over a golden-ratio stream offset
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random source. All distributions are implemented on top of
/// the raw mt19937_64 stream (whose output is fixed by the standard), so a
/// given seed produces identical values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Exp(1) via inversion; always finite since uniform01() < 1.
    double exponential() { return -std::log1p(-uniform01()); }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace hh
