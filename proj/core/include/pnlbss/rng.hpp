#pragma once

#include <cstdint>

namespace pnlbss {

// Bit-stable generators for reproducible data synthesis. xoshiro256++ seeded
// through splitmix64, per the reference implementations by Blackman & Vigna.
// Fixed forever: acceptance runs depend on the exact streams.

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : state_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

/// Deterministic per-stream sub-seed: mixes the scenario seed with a stream tag.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t stream_tag) {
    SplitMix64 sm(seed ^ (0x9e3779b97f4a7c15ULL * (stream_tag + 1)));
    return sm.next();
}

}  // namespace pnlbss
