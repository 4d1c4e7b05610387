#ifndef WBUS_RNG_HPP
#define WBUS_RNG_HPP

#include <cstdint>
#include <cmath>
#include <numbers>

namespace wbus::rng {

// Counter-based generation: draw(seed, sample, param, ion) is a pure
// function, so a sample stream is identical regardless of evaluation order.
// Mixer is the splitmix64 finalizer.

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t sample,
                                  std::uint64_t param, std::uint64_t ion) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (sample + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (param + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (ion + 0x94d049bb133111ebULL));
    return h;
}

// uniform in [0, 1), 53-bit resolution
inline double uniform01(std::uint64_t seed, std::uint64_t sample,
                        std::uint64_t param, std::uint64_t ion) {
    return static_cast<double>(counter_hash(seed, sample, param, ion) >> 11) *
           0x1.0p-53;
}

// uniform in [-1, 1]
inline double uniform_pm1(std::uint64_t seed, std::uint64_t sample,
                          std::uint64_t param, std::uint64_t ion) {
    return 2.0 * uniform01(seed, sample, param, ion) - 1.0;
}

// standard normal via Box-Muller on two decorrelated lanes of the counter
inline double standard_normal(std::uint64_t seed, std::uint64_t sample,
                              std::uint64_t param, std::uint64_t ion) {
    const double u1 = uniform01(seed, sample, param, ion ^ 0x5555555555555555ULL);
    const double u2 = uniform01(seed, sample, param, ion ^ 0xaaaaaaaaaaaaaaaaULL);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1)); // 1-u1 in (0,1], log finite
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace wbus::rng

#endif // WBUS_RNG_HPP
