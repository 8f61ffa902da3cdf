#include "idlc/gf2m.hpp"

namespace idlc {

namespace {
// Primitive polynomials, index = m.
constexpr std::uint32_t kPrimPoly[13] = {
    0,     0,     0x7,   0xB,   0x13,  0x25,  0x43,
    0x89,  0x11D, 0x211, 0x409, 0x805, 0x1053,
};
}  // namespace

GF2m::GF2m(unsigned m) : m_(m) {
    if (m < 3 || m > 12) throw InvalidInputError("GF2m: m outside [3, 12]");
    n_ = (1u << m) - 1;
    exp_.assign(2 * n_, 0);
    log_.assign(n_ + 1, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x > n_) x ^= kPrimPoly[m];
    }
    for (std::uint32_t i = 0; i < n_; ++i) exp_[n_ + i] = exp_[i];
}

}  // namespace idlc
