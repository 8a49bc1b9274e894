#pragma once

#include <cstdint>

namespace braidkit {

/// splitmix64: the fixed PRNG behind every randomized run. Party streams are
/// derived by successive draws from a master generator seeded with the run
/// seed, so transcripts are reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, m) by rejection.
    std::uint64_t below(std::uint64_t m) {
        std::uint64_t threshold = (0 - m) % m;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % m;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace braidkit
