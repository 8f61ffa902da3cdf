#pragma once

#include <cstdint>
#include <optional>

#include "idlc/bitstring.hpp"
#include "idlc/fraction.hpp"

namespace idlc {

/// Fraction of positions where x and y disagree. Lengths and alphabets must match.
Fraction hamming_fractional(const SymbolString& x, const SymbolString& y);
Fraction hamming_fractional(const BitString& x, const BitString& y);

/// Minimum number of insertions plus deletions transforming x into y
/// (|x| + |y| - 2 LCS; a substitution costs two operations).
std::uint64_t edit_raw(const BitString& x, const BitString& y);

/// edit_raw(x, y) / (2 |x|); x is the uncorrupted reference word.
Fraction edit_fractional(const BitString& x, const BitString& y);

/**
 * Banded variant: exact whenever the true distance is at most `band`,
 * otherwise nullopt ("greater than band"). Games use this to test a
 * distance threshold without paying the full quadratic table on long words.
 */
std::optional<std::uint64_t> edit_raw_banded(const BitString& x, const BitString& y,
                                             std::uint64_t band);

}  // namespace idlc
