#pragma once

#include <cstdint>

#include "idlc/bitstring.hpp"
#include "idlc/oracle.hpp"
#include "idlc/rng.hpp"

namespace idlc {

/// Parameters of a locally decodable Hamming code.
struct LocalCodeSpec {
    std::size_t k = 0;       ///< message length
    std::size_t K = 0;       ///< codeword length
    std::uint32_t q1 = 2;    ///< message alphabet
    std::uint32_t q2 = 2;    ///< codeword alphabet
    std::size_t ell = 0;     ///< locality (queries per decoded index)
    double rho = 0.0;        ///< tolerated fractional error
    double p = 1.0;          ///< target per-index success probability

    void validate() const;
};

/**
 * Hadamard code: position a of the codeword holds <msg, a> mod 2 over all
 * a in {0,1}^k in increasing binary order. 2-query local decoding; used as
 * a small, fully checkable substrate for the compiler and game plumbing.
 */
class HadamardCode {
public:
    static constexpr std::size_t kMaxMessageLen = 20;

    explicit HadamardCode(std::size_t k, double rho = 0.125, std::size_t repetitions = 15);

    const LocalCodeSpec& spec() const { return spec_; }
    std::size_t repetitions() const { return repetitions_; }

    BitString encode(const BitString& msg) const;

    /// Samples a, reads a and a^e_i, returns the XOR. Exactly 2 queries.
    int local_decode(const QueryOracle& oracle, std::size_t i, Rng& rng) const;

    /// Majority of `repetitions` independent local decodes per index.
    SymbolString decode_all(const QueryOracle& oracle, Rng& rng) const;

private:
    LocalCodeSpec spec_;
    std::size_t repetitions_;
};

}  // namespace idlc
