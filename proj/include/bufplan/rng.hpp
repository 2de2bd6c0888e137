#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace bufplan {

// Counter-based PRNG: SplitMix64 evaluated in counter mode.
//
//   value(key, i) = mix64(key + i * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer. Child streams are derived as
// mix64(key ^ fnv1a64(label)). The exact constants are documented in the
// README so streams can be reproduced by other implementations.

inline constexpr std::uint64_t kRngGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

class Rng {
public:
    Rng() = default;
    explicit Rng(std::uint64_t key) : key_(key) {}

    std::uint64_t key() const { return key_; }

    // Independent child stream selected by purpose, e.g. "arrival:p3".
    Rng stream(std::string_view label) const { return Rng(mix64(key_ ^ fnv1a64(label))); }

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kRngGamma); }

    // Uniform on the open interval (0,1); endpoints never occur.
    double uniform01() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // Inverse-transform exponential sample.
    double exponential(double rate) { return -std::log(uniform01()) / rate; }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace bufplan
