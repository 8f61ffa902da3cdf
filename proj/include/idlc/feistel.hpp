#pragma once

#include <array>
#include <cstdint>

#include "idlc/errors.hpp"
#include "idlc/rng.hpp"

namespace idlc {

/**
 * Format-preserving keyed permutation over [0, domain) — balanced Feistel on
 * the next power of two with cycle walking back into the domain.
 */
class KeyedPermutation {
public:
    static constexpr unsigned kRounds = 7;

    KeyedPermutation(std::uint64_t domain, std::uint64_t seed);

    std::uint64_t domain() const { return domain_; }
    std::uint64_t forward(std::uint64_t x) const;
    std::uint64_t inverse(std::uint64_t y) const;

private:
    std::uint64_t permute_once(std::uint64_t v, bool forward) const;

    std::uint64_t domain_;
    unsigned half_bits_;
    std::uint64_t half_mask_;
    std::array<std::uint64_t, kRounds> round_keys_{};
};

/// Keyed bit stream: position-addressable pad derived from a 64-bit seed.
class PadStream {
public:
    explicit PadStream(std::uint64_t seed) : seed_(seed) {}

    int bit(std::uint64_t pos) const { return static_cast<int>(mix64(seed_, pos) & 1u); }

private:
    std::uint64_t seed_;
};

}  // namespace idlc
