#include "idlc/feistel.hpp"

#include <bit>

namespace idlc {

KeyedPermutation::KeyedPermutation(std::uint64_t domain, std::uint64_t seed) : domain_(domain) {
    if (domain < 2) throw InvalidInputError("KeyedPermutation: domain must be >= 2");
    unsigned bits = std::bit_width(domain - 1);
    if (bits < 2) bits = 2;
    half_bits_ = (bits + 1) / 2;
    half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
    std::uint64_t state = seed;
    for (auto& rk : round_keys_) rk = splitmix64(state);
}

std::uint64_t KeyedPermutation::permute_once(std::uint64_t v, bool forward) const {
    std::uint64_t left = (v >> half_bits_) & half_mask_;
    std::uint64_t right = v & half_mask_;
    if (forward) {
        for (unsigned r = 0; r < kRounds; ++r) {
            std::uint64_t next = left ^ (mix64(round_keys_[r], right) & half_mask_);
            left = right;
            right = next;
        }
    } else {
        for (unsigned r = kRounds; r-- > 0;) {
            std::uint64_t prev = right ^ (mix64(round_keys_[r], left) & half_mask_);
            right = left;
            left = prev;
        }
    }
    return (left << half_bits_) | right;
}

std::uint64_t KeyedPermutation::forward(std::uint64_t x) const {
    if (x >= domain_) throw std::out_of_range("KeyedPermutation::forward: outside domain");
    std::uint64_t y = permute_once(x, true);
    while (y >= domain_) y = permute_once(y, true);  // cycle walk
    return y;
}

std::uint64_t KeyedPermutation::inverse(std::uint64_t y) const {
    if (y >= domain_) throw std::out_of_range("KeyedPermutation::inverse: outside domain");
    std::uint64_t x = permute_once(y, false);
    while (x >= domain_) x = permute_once(x, false);
    return x;
}

}  // namespace idlc
