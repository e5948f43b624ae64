#include "bwmeta/rng.hpp"

#include <cmath>

namespace bwmeta {

std::uint64_t hash64(std::initializer_list<std::uint64_t> words) {
    // Absorb each word into a SplitMix64 walk started from a fixed constant
    // (fractional bits of sqrt(2)). Order-sensitive by construction.
    std::uint64_t state = 0x6a09e667f3bcc908ULL;
    for (std::uint64_t w : words) {
        state ^= w;
        state = splitmix64(state);
    }
    return state;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

double Xoshiro256pp::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

} // namespace bwmeta
