#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "idlc/bch.hpp"
#include "idlc/bitstring.hpp"
#include "idlc/feistel.hpp"
#include "idlc/oracle.hpp"

namespace idlc {

/**
 * Secret key for the keyed Hamming code: seeds for the position permutation
 * and the additive pad. Only the designated key-aware test adversary may see
 * one; channels get the codeword alone.
 */
struct SecretKey {
    std::uint32_t lambda = 0;
    std::array<std::uint8_t, 32> perm_seed{};
    std::array<std::uint8_t, 32> pad_seed{};

    std::uint64_t perm_seed64() const;
    std::uint64_t pad_seed64() const;

    /// Versioned little-endian layout: 0x01, u32 lambda, 32B perm, 32B pad.
    std::vector<std::uint8_t> serialize() const;
    static SecretKey deserialize(const std::vector<std::uint8_t>& bytes);

    friend bool operator==(const SecretKey& a, const SecretKey& b) {
        return a.lambda == b.lambda && a.perm_seed == b.perm_seed && a.pad_seed == b.pad_seed;
    }
};

/// Fresh key with lambda bits of entropy per seed. lambda must be >= 16.
SecretKey generate_key(std::uint32_t lambda);

/// Deterministic variant for replayable experiments.
SecretKey generate_key(std::uint32_t lambda, Rng& rng);

struct PrivateCodeParams {
    std::size_t k = 0;          ///< caller-visible message length
    std::size_t m = 0;          ///< payload bits per block
    std::size_t block_len = 0;  ///< encoded bits per block; inner_rate = m/block_len
    std::size_t padded_k = 0;   ///< k rounded up to a multiple of m
    std::size_t K = 0;          ///< codeword length = (padded_k/m) * block_len
    std::size_t ell = 0;        ///< locality = block_len
    unsigned bch_field_m = 8;
    unsigned bch_t = 30;
    double delta_b = 0.0;       ///< per-block correction radius = t / block_len
    double rho = 0.0;           ///< tolerated codeword error rate = delta_b / 4
    double p = 0.99;            ///< per-index success target
    double eps = 0.01;          ///< fooling-probability target

    std::size_t num_blocks() const { return padded_k / m; }

    /**
     * Block geometry from the security parameter: the field size (and with
     * it the block payload) steps up with lambda, keeping the per-block rate
     * near 1/4 and the correction radius near 0.12.
     */
    static PrivateCodeParams from_lambda(std::uint32_t lambda, std::size_t k);
};

/**
 * One-time keyed Hamming code: per-block BCH, keyed position permutation,
 * keyed pad. Constant rate; locality is one block.
 */
class PrivateCode {
public:
    explicit PrivateCode(PrivateCodeParams params);

    const PrivateCodeParams& params() const { return params_; }
    const BchCode& block_code() const { return *bch_; }

    BitString encode(const BitString& x, const SecretKey& sk) const;

    /// Decodes message bit i through the oracle; exactly ell queries.
    /// nullopt when the block code reports an uncorrectable block.
    std::optional<int> local_decode(const QueryOracle& oracle, std::size_t i,
                                    const SecretKey& sk) const;

    struct BlockDecode {
        BitString payload;  ///< m bits; meaningful only when ok
        bool ok = false;
    };

    /// One block-code decode serving all m indices of block j.
    BlockDecode decode_block(const QueryOracle& oracle, std::size_t block,
                             const SecretKey& sk) const;

    /// Codeword positions carrying block j, in permuted (transmitted) order.
    std::vector<std::size_t> block_positions(std::size_t block, const SecretKey& sk) const;

private:
    PrivateCodeParams params_;
    std::shared_ptr<const BchCode> bch_;
};

}  // namespace idlc
