#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace berbn {

// SplitMix64 output function (Steele/Lea/Flood). Used only to mix seeds so
// that substreams derived from (master seed, index...) are decorrelated.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed for the substream identified by `indices`. Results are
// identical regardless of platform or thread scheduling, which is what makes
// parallel trial execution reproducible.
template <class... Ix>
constexpr std::uint64_t derive_seed(std::uint64_t master, Ix... indices) noexcept {
    std::uint64_t h = splitmix64(master);
    ((h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(indices)))), ...);
    return h;
}

// Seeded random stream: mt19937_64 plus the floating-point transforms used by
// the channel models. Every output is fully determined by the seed, so two
// Rng instances with equal seeds produce identical sequences on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    int next_bit() { return static_cast<int>(gen_() >> 63); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double next_unit_open() { return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53; }

    // Uniform in [0, 2*pi).
    double next_angle() { return next_unit() * 2.0 * std::numbers::pi; }

    // Two independent standard normal deviates (Box-Muller).
    std::pair<double, double> next_gaussian_pair() {
        const double r = std::sqrt(-2.0 * std::log(next_unit_open()));
        const double a = next_angle();
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace berbn
