#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace bwmeta {

// Portable, fully specified PRNG machinery. Every random quantity in the
// pipeline is derived from 64-bit seeds through these functions, so datasets,
// checkpoints and predictions are reproducible bit-for-bit across platforms.
// std::mt19937 / std::normal_distribution are deliberately avoided: the
// standard does not pin down distribution algorithms.

/// SplitMix64 finalizer (Steele, Lea & Flood's mixer, as published in the
/// xoshiro reference material). Used for seeding and for hash64 below.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// 64-bit hash of a word sequence, used to derive independent seed streams:
/// seed_j = hash64({master_seed, tag, j}). Chained SplitMix64 absorption.
std::uint64_t hash64(std::initializer_list<std::uint64_t> words);

/// FNV-1a 64-bit over bytes; used to fold string tags into hash64 words and
/// to content-hash input files for run manifests.
std::uint64_t fnv1a64(std::string_view bytes);

/// xoshiro256++ (Blackman & Vigna, 2019). State seeded via SplitMix64 so any
/// 64-bit seed, including 0, yields a valid nonzero state.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0,1]; safe under log().
    double uniform_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller on two uniforms (pairs cached).
    double normal();

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4]{};
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace bwmeta
