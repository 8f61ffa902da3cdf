#pragma once

#include <cstdint>
#include <vector>

#include "idlc/errors.hpp"

namespace idlc {

/// GF(2^m) arithmetic via exp/log tables, m in [3, 12].
class GF2m {
public:
    explicit GF2m(unsigned m);

    unsigned m() const { return m_; }
    std::uint32_t order() const { return n_; }  // 2^m - 1

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw InvalidInputError("GF2m::inv: zero");
        return exp_[n_ - log_[a]];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    /// alpha^e for any integer exponent e >= 0.
    std::uint32_t alpha_pow(std::uint64_t e) const { return exp_[e % n_]; }

    std::uint32_t log(std::uint32_t a) const {
        if (a == 0) throw InvalidInputError("GF2m::log: zero");
        return log_[a];
    }

private:
    unsigned m_;
    std::uint32_t n_;
    std::vector<std::uint32_t> exp_;  // length 2n, doubled to skip a mod
    std::vector<std::uint32_t> log_;
};

}  // namespace idlc
