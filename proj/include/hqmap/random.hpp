#pragma once

#include <cstdint>
#include <random>

#include "hqmap/numeric.hpp"

namespace hqmap {

/// splitmix64 finalizer; derives independent per-trial seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream)
{
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic sampler. Bounded draws use rejection on the raw mt19937_64
/// stream so results are identical across standard library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    long long uniform(long long lo, long long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return lo + static_cast<long long>(rng_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = rng_();
        while (x >= limit);
        return lo + static_cast<long long>(x % span);
    }

    /// p / q with p, q independent and uniform in [1, bound].
    Rational positive_rational(long long bound) { return Rational(uniform(1, bound), uniform(1, bound)); }

    /// Real and imaginary parts drawn independently by positive_rational.
    Gaussian gaussian(long long bound)
    {
        Rational re = positive_rational(bound);
        Rational im = positive_rational(bound);
        return {re, im};
    }

    /// Gaussian integer with parts uniform in [-bound, bound].
    Gaussian small_gaussian(long long bound, bool real_only = false)
    {
        Rational re = uniform(-bound, bound);
        Rational im = real_only ? Rational(0) : Rational(uniform(-bound, bound));
        return {re, im};
    }

private:
    std::mt19937_64 rng_;
};

} // namespace hqmap
