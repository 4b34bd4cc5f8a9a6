// SPDX-FileCopyrightText: © 2026 cnndpd contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

// Deterministic random number generation.
//
// Every random draw in this project comes from xoshiro256** (Blackman/Vigna)
// seeded through SplitMix64, so runs are reproducible from a single 64-bit
// seed and other implementations can match the streams bit for bit.
// Per-module streams are derived as splitmix64(seed ^ fnv1a64(tag)).

namespace cnndpd {

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Derives an independent stream seed for a named module/stage.
inline uint64_t derive_seed(uint64_t master_seed, std::string_view tag) {
    uint64_t s = master_seed ^ fnv1a64(tag);
    return splitmix64_next(s);
}

class Xoshiro256ss {
  public:
    using result_type = uint64_t;

    explicit Xoshiro256ss(uint64_t seed = 0) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~uint64_t{0}; }

    result_type operator()() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased-enough index draw for small n (top bits of the 64-bit word).
    uint32_t bounded(uint32_t n) {
        return static_cast<uint32_t>(((*this)() >> 32) * uint64_t{n} >> 32);
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4]{};
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace cnndpd
