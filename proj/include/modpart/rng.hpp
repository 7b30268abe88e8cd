#pragma once

#include <cstdint>

namespace modpart {

// SplitMix64 output function (Steele/Lea/Vigna). The whole project draws its
// randomness through this one function so that every sampler is a pure
// function of (seed, counter) and reproduces bit-identically on any platform.
constexpr std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Sequential view of the counter-based stream: next() == mix64(seed, i) for
// the i-th call.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() { return mix64(seed_, counter_++); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Single bits drawn LSB-first from successive words of a SplitMix64 stream.
class BitStream {
public:
    explicit BitStream(std::uint64_t seed) : rng_(seed) {}

    bool next_bit() {
        if (left_ == 0) {
            word_ = rng_.next();
            left_ = 64;
        }
        bool b = word_ & 1u;
        word_ >>= 1;
        --left_;
        return b;
    }

private:
    SplitMix64 rng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

} // namespace modpart
