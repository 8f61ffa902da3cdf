#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "idlc/bitstring.hpp"
#include "idlc/gf2m.hpp"

namespace idlc {

/**
 * Binary primitive BCH code of length n = 2^m - 1 correcting t errors.
 *
 * The dimension k falls out of the generator polynomial (n minus its
 * degree). Encoding is systematic: payload first, parity after. Decoding is
 * syndromes + Berlekamp-Massey + Chien search; more than t errors (or an
 * inconsistent locator) reports failure instead of guessing.
 */
class BchCode {
public:
    BchCode(unsigned field_m, unsigned t);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    unsigned t() const { return t_; }

    BitString encode(const BitString& payload) const;

    /// nullopt when the word is uncorrectable within radius t.
    std::optional<BitString> decode(const BitString& word) const;

    /// Corrects `word` in place and reports the error count, or nullopt.
    std::optional<unsigned> correct_in_place(BitString& word) const;

private:
    GF2m gf_;
    unsigned t_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::uint8_t> gen_;  // generator coefficients, index = power
};

}  // namespace idlc
