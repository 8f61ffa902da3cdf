#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace idlc {

/// splitmix64 step; used for seed derivation and keyed bit streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    return splitmix64(s);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/**
 * Deterministic random stream with platform-stable sampling.
 *
 * std::uniform_int_distribution output is not pinned by the standard, so
 * bounded draws use Lemire reduction over mt19937_64 directly; transcripts
 * replay bit-for-bit from a recorded seed.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : base_seed_(seed), gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift with rejection.
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    int bit() { return static_cast<int>(next_u64() >> 63); }

    bool coin() { return bit() != 0; }

    /// Uniform double in [0,1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Independent child stream; does not consume state of this stream.
    Rng derive(std::string_view label, std::uint64_t index = 0) const {
        return Rng(mix64(mix64(base_seed_, fnv1a64(label)), index));
    }

    std::uint64_t base_seed() const { return base_seed_; }

private:
    std::uint64_t base_seed_;
    std::mt19937_64 gen_;
};

}  // namespace idlc
