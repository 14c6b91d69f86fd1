#pragma once

#include <cstdint>

namespace miclab {

// Identifier recorded in run manifests; outputs are reproducible across
// implementations that agree on this algorithm.
inline constexpr const char* kRngAlgorithm = "splitmix64";

// Counter-based 64-bit generator (SplitMix64). The i-th output is
// mix64(seed + (i+1)*gamma) with a fixed gamma, so a stream is a pure
// function of (seed, counter).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return mix(state_ += 0x9E3779B97F4A7C15ULL); }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Deterministic sub-stream seed from a master seed and up to three stream
// coordinates (e.g. sample size, trial index, stream role).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = SplitMix64::mix(master ^ 0x9E3779B97F4A7C15ULL);
    s = SplitMix64::mix(s ^ a);
    s = SplitMix64::mix(s ^ b);
    s = SplitMix64::mix(s ^ c);
    return s;
}

}  // namespace miclab
