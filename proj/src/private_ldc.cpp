#include "idlc/private_ldc.hpp"

#include <random>

namespace idlc {

namespace {

std::uint64_t seed64_from_bytes(const std::array<std::uint8_t, 32>& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

}  // namespace

std::uint64_t SecretKey::perm_seed64() const { return seed64_from_bytes(perm_seed); }
std::uint64_t SecretKey::pad_seed64() const { return seed64_from_bytes(pad_seed); }

std::vector<std::uint8_t> SecretKey::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(69);
    out.push_back(0x01);
    put_u32le(out, lambda);
    out.insert(out.end(), perm_seed.begin(), perm_seed.end());
    out.insert(out.end(), pad_seed.begin(), pad_seed.end());
    return out;
}

SecretKey SecretKey::deserialize(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() != 69) throw FormatError("SecretKey: expected 69 bytes");
    if (bytes[0] != 0x01) throw FormatError("SecretKey: unknown version byte");
    SecretKey sk;
    sk.lambda = static_cast<std::uint32_t>(bytes[1]) | (static_cast<std::uint32_t>(bytes[2]) << 8) |
                (static_cast<std::uint32_t>(bytes[3]) << 16) |
                (static_cast<std::uint32_t>(bytes[4]) << 24);
    std::copy(bytes.begin() + 5, bytes.begin() + 37, sk.perm_seed.begin());
    std::copy(bytes.begin() + 37, bytes.begin() + 69, sk.pad_seed.begin());
    return sk;
}

SecretKey generate_key(std::uint32_t lambda) {
    if (lambda < 16) throw InvalidInputError("generate_key: lambda below the 16-bit floor");
    SecretKey sk;
    sk.lambda = lambda;
    const std::size_t active = std::min<std::size_t>((lambda + 7) / 8, 32);
    try {
        std::random_device rd;
        auto fill = [&](std::array<std::uint8_t, 32>& seed) {
            for (std::size_t i = 0; i < active; ++i)
                seed[i] = static_cast<std::uint8_t>(rd());
        };
        fill(sk.perm_seed);
        fill(sk.pad_seed);
    } catch (const std::exception& e) {
        throw InsufficientEntropyError(std::string("generate_key: randomness source failed: ") +
                                       e.what());
    }
    return sk;
}

SecretKey generate_key(std::uint32_t lambda, Rng& rng) {
    if (lambda < 16) throw InvalidInputError("generate_key: lambda below the 16-bit floor");
    SecretKey sk;
    sk.lambda = lambda;
    const std::size_t active = std::min<std::size_t>((lambda + 7) / 8, 32);
    for (std::size_t i = 0; i < active; ++i)
        sk.perm_seed[i] = static_cast<std::uint8_t>(rng.below(256));
    for (std::size_t i = 0; i < active; ++i)
        sk.pad_seed[i] = static_cast<std::uint8_t>(rng.below(256));
    return sk;
}

PrivateCodeParams PrivateCodeParams::from_lambda(std::uint32_t lambda, std::size_t k) {
    if (lambda < 16) throw InvalidInputError("PrivateCodeParams: lambda below the 16-bit floor");
    if (k < 1) throw InvalidInputError("PrivateCodeParams: empty message");
    PrivateCodeParams p;
    p.k = k;
    // Field ladder: payload grows with lambda while the rough 1/4 rate and
    // the 2t+1 design distance are held by the t choices below.
    if (lambda <= 64) {
        p.bch_field_m = 8;
        p.bch_t = 30;  // (255, 63)
    } else if (lambda <= 128) {
        p.bch_field_m = 9;
        p.bch_t = 55;  // (511, ~130)
    } else {
        p.bch_field_m = 10;
        p.bch_t = 110;  // (1023, ~258)
    }
    BchCode probe(p.bch_field_m, p.bch_t);
    p.m = probe.k();
    p.block_len = probe.n();
    p.padded_k = ((k + p.m - 1) / p.m) * p.m;
    p.K = (p.padded_k / p.m) * p.block_len;
    p.ell = p.block_len;
    p.delta_b = static_cast<double>(p.bch_t) / static_cast<double>(p.block_len);
    p.rho = p.delta_b / 4.0;
    return p;
}

PrivateCode::PrivateCode(PrivateCodeParams params) : params_(params) {
    bch_ = std::make_shared<const BchCode>(params_.bch_field_m, params_.bch_t);
    if (bch_->k() != params_.m || bch_->n() != params_.block_len)
        throw InvalidInputError("PrivateCode: params disagree with block code geometry");
    if (params_.padded_k % params_.m != 0)
        throw InvalidInputError("PrivateCode: padded_k must be a multiple of m");
}

BitString PrivateCode::encode(const BitString& x, const SecretKey& sk) const {
    if (x.size() != params_.k) throw LengthMismatchError("PrivateCode::encode: message length");
    BitString padded = x;
    while (padded.size() < params_.padded_k) padded.push_back(0);

    BitString base(params_.K);
    const std::size_t blocks = params_.num_blocks();
    for (std::size_t j = 0; j < blocks; ++j) {
        BitString payload = padded.slice(j * params_.m, params_.m);
        BitString cw = bch_->encode(payload);
        for (std::size_t r = 0; r < params_.block_len; ++r)
            if (cw.get(r)) base.set(j * params_.block_len + r, 1);
    }

    KeyedPermutation perm(params_.K, sk.perm_seed64());
    PadStream pad(sk.pad_seed64());
    BitString out(params_.K);
    for (std::size_t i = 0; i < params_.K; ++i) {
        const std::size_t dst = perm.forward(i);
        out.set(dst, base.get(i) ^ pad.bit(dst));
    }
    return out;
}

std::vector<std::size_t> PrivateCode::block_positions(std::size_t block,
                                                      const SecretKey& sk) const {
    if (block >= params_.num_blocks()) throw std::out_of_range("PrivateCode::block_positions");
    KeyedPermutation perm(params_.K, sk.perm_seed64());
    std::vector<std::size_t> pos(params_.block_len);
    for (std::size_t r = 0; r < params_.block_len; ++r)
        pos[r] = perm.forward(block * params_.block_len + r);
    return pos;
}

PrivateCode::BlockDecode PrivateCode::decode_block(const QueryOracle& oracle, std::size_t block,
                                                   const SecretKey& sk) const {
    KeyedPermutation perm(params_.K, sk.perm_seed64());
    PadStream pad(sk.pad_seed64());
    BitString word(params_.block_len);
    for (std::size_t r = 0; r < params_.block_len; ++r) {
        const std::size_t pos = perm.forward(block * params_.block_len + r);
        word.set(r, oracle.read(pos) ^ pad.bit(pos));
    }
    auto payload = bch_->decode(word);
    if (!payload) return {BitString(params_.m), false};
    return {std::move(*payload), true};
}

std::optional<int> PrivateCode::local_decode(const QueryOracle& oracle, std::size_t i,
                                             const SecretKey& sk) const {
    if (i >= params_.k) throw std::out_of_range("PrivateCode::local_decode: index");
    auto block = decode_block(oracle, i / params_.m, sk);
    if (!block.ok) return std::nullopt;
    return block.payload.get(i % params_.m);
}

}  // namespace idlc
