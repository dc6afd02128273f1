#pragma once

#include <cstdint>

namespace percodet {

/// 64-bit seed for every randomized operation in the library.
struct Seed {
    std::uint64_t value = 0;
};

namespace rng {

// SplitMix64 finalizer (Steele, Lea, Flood). Full avalanche, bijective.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Counter-based uniform draw on the open interval (0,1).
/// Draw #counter of the stream identified by `seed`; no sequential state,
/// so any evaluation order (or none) yields the same values.
inline double uniform01(Seed seed, std::uint64_t counter) {
    const std::uint64_t z = mix64(seed.value + (counter + 1) * kGolden);
    return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
}

/// Child seed for sub-computation `index` (trial, run, ...). Domain-separated
/// from the uniform01 counter stream.
inline Seed derive(Seed seed, std::uint64_t index) {
    return Seed{mix64((seed.value ^ 0x6A09E667F3BCC909ULL) + (index + 1) * kGolden)};
}

}  // namespace rng
}  // namespace percodet
