#include "idlc/metrics.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace idlc {

Fraction hamming_fractional(const SymbolString& x, const SymbolString& y) {
    if (x.size() != y.size() || x.q() != y.q())
        throw LengthMismatchError("hamming_fractional: shape mismatch");
    if (x.empty()) throw EmptyInputError("hamming_fractional: empty input");
    std::int64_t mismatches = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.get(i) != y.get(i)) ++mismatches;
    return Fraction(mismatches, static_cast<std::int64_t>(x.size()));
}

Fraction hamming_fractional(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw LengthMismatchError("hamming_fractional: length mismatch");
    if (x.empty()) throw EmptyInputError("hamming_fractional: empty input");
    std::int64_t mismatches = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.get(i) != y.get(i)) ++mismatches;
    return Fraction(mismatches, static_cast<std::int64_t>(x.size()));
}

std::uint64_t edit_raw(const BitString& x, const BitString& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    if (n == 0 || m == 0) return n + m;

    // LCS with one rolling row; edit = n + m - 2 lcs.
    const auto xb = x.to_bools();
    const auto yb = y.to_bools();
    const auto* shorter = &yb;
    const auto* longer = &xb;
    if (xb.size() < yb.size()) std::swap(shorter, longer);

    std::vector<std::uint32_t> row(shorter->size() + 1, 0);
    for (std::size_t i = 1; i <= longer->size(); ++i) {
        std::uint32_t diag = 0;
        const std::uint8_t xi = (*longer)[i - 1];
        for (std::size_t j = 1; j <= shorter->size(); ++j) {
            std::uint32_t tmp = row[j];
            if (xi == (*shorter)[j - 1])
                row[j] = diag + 1;
            else
                row[j] = std::max(row[j], row[j - 1]);
            diag = tmp;
        }
    }
    return n + m - 2ull * row[shorter->size()];
}

Fraction edit_fractional(const BitString& x, const BitString& y) {
    if (x.empty()) throw EmptyInputError("edit_fractional: empty reference");
    return Fraction(static_cast<std::int64_t>(edit_raw(x, y)),
                    2 * static_cast<std::int64_t>(x.size()));
}

std::optional<std::uint64_t> edit_raw_banded(const BitString& x, const BitString& y,
                                             std::uint64_t band) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    const std::int64_t m = static_cast<std::int64_t>(y.size());
    const std::int64_t b = static_cast<std::int64_t>(band);
    if (std::llabs(n - m) > b) return std::nullopt;

    const auto xb = x.to_bools();
    const auto yb = y.to_bools();
    constexpr std::uint64_t kInf = std::numeric_limits<std::uint32_t>::max();

    // D[i][j] restricted to |j - i| <= b, stored per-row at offset j - i + b.
    const std::int64_t width = 2 * b + 1;
    std::vector<std::uint64_t> prev(width, kInf), cur(width, kInf);
    for (std::int64_t d = 0; d <= std::min(b, m); ++d) prev[d + b] = static_cast<std::uint64_t>(d);
    for (std::int64_t i = 1; i <= n; ++i) {
        std::fill(cur.begin(), cur.end(), kInf);
        const std::int64_t jlo = std::max<std::int64_t>(0, i - b);
        const std::int64_t jhi = std::min(m, i + b);
        for (std::int64_t j = jlo; j <= jhi; ++j) {
            const std::int64_t off = j - i + b;
            std::uint64_t best = kInf;
            if (j > 0 && xb[i - 1] == yb[j - 1] && prev[off] != kInf)
                best = std::min(best, prev[off]);  // diagonal match
            if (off + 1 < width && prev[off + 1] != kInf)
                best = std::min(best, prev[off + 1] + 1);  // delete x[i-1]
            if (off - 1 >= 0 && cur[off - 1] != kInf)
                best = std::min(best, cur[off - 1] + 1);  // insert y[j-1]
            cur[off] = best;
        }
        std::swap(prev, cur);
    }
    const std::uint64_t result = prev[m - n + b];
    if (result > band) return std::nullopt;
    return result;
}

}  // namespace idlc
