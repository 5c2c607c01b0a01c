#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "schedarena/errors.hpp"

namespace schedarena {

/// Seeded generator with explicit variate transforms. std::mt19937_64 output
/// is fully specified by the standard and the transforms below avoid the
/// implementation-defined std::*_distribution classes, so identical seeds
/// give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform real in [lo, hi).
    double uniform(double lo, double hi) {
        expect(hi >= lo, Errc::InvalidDistributionParams, "uniform: hi < lo");
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        expect(hi >= lo, Errc::InvalidDistributionParams, "uniform_int: hi < lo");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    /// Exponential with the given mean (inverse-CDF transform).
    double exponential_mean(double mean) {
        expect(mean > 0, Errc::InvalidDistributionParams, "exponential: mean <= 0");
        double u;
        do { u = uniform01(); } while (u <= 0.0);
        return -mean * std::log(u);
    }

    /// Independent stream for a named sub-purpose; a pure function of the
    /// original seed and the salt, so fork order cannot perturb results.
    Rng fork(std::uint64_t salt) const { return Rng(splitmix(seed_ ^ salt)); }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace schedarena
