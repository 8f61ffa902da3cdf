#pragma once

// Test-only reference implementations. These stay independent of the library
// code paths they check.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "idlc/bitstring.hpp"

namespace idlc::testing {

/// Plain recursive insertion-deletion distance with memoization. Substitution
/// is not an atomic operation.
inline std::uint64_t naive_edit_distance(const std::string& x, const std::string& y) {
    std::vector<std::vector<std::int64_t>> memo(x.size() + 1,
                                                std::vector<std::int64_t>(y.size() + 1, -1));
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> std::uint64_t {
        if (i == 0) return j;
        if (j == 0) return i;
        auto& slot = memo[i][j];
        if (slot >= 0) return static_cast<std::uint64_t>(slot);
        std::uint64_t best;
        if (x[i - 1] == y[j - 1]) {
            best = self(self, i - 1, j - 1);
        } else {
            best = 1 + std::min(self(self, i - 1, j), self(self, i, j - 1));
        }
        slot = static_cast<std::int64_t>(best);
        return best;
    };
    return rec(rec, x.size(), y.size());
}

inline std::uint64_t naive_edit_distance(const idlc::BitString& x, const idlc::BitString& y) {
    return naive_edit_distance(x.to_string(), y.to_string());
}

}  // namespace idlc::testing
