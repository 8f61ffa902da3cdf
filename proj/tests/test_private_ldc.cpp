#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "idlc/bch.hpp"
#include "idlc/feistel.hpp"
#include "idlc/metrics.hpp"
#include "idlc/private_ldc.hpp"

using namespace idlc;

namespace {

BitString random_bits(Rng& rng, std::size_t len) {
    BitString out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (rng.coin()) out.set(i, 1);
    return out;
}

}  // namespace

TEST_CASE("bch(255,63) geometry matches the reference tables") {
    BchCode bch(8, 30);
    CHECK(bch.n() == 255);
    CHECK(bch.k() == 63);
    CHECK(bch.t() == 30);
}

TEST_CASE("bch corrects up to t errors and flags more") {
    BchCode bch(8, 30);
    Rng rng(0xbc4u);
    for (int trial = 0; trial < 40; ++trial) {
        auto payload = random_bits(rng, bch.k());
        auto cw = bch.encode(payload);
        // Sprinkle exactly t random errors.
        std::set<std::uint64_t> flips;
        while (flips.size() < bch.t()) flips.insert(rng.below(bch.n()));
        BitString noisy = cw;
        for (auto f : flips) noisy.flip(f);
        auto decoded = bch.decode(noisy);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == payload);
    }
    // The all-flipped word is a codeword of the complement payload, so a
    // whole-block flip decodes cleanly to entirely wrong bits.
    auto payload = random_bits(rng, bch.k());
    auto cw = bch.encode(payload);
    BitString flipped(bch.n());
    for (std::size_t i = 0; i < bch.n(); ++i) flipped.set(i, 1 - cw.get(i));
    auto decoded = bch.decode(flipped);
    REQUIRE(decoded.has_value());
    for (std::size_t i = 0; i < bch.k(); ++i) CHECK(decoded->get(i) == 1 - payload.get(i));
}

TEST_CASE("bch rejects burst beyond radius more often than not") {
    BchCode bch(8, 30);
    Rng rng(0x77u);
    int failures_or_wrong = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto payload = random_bits(rng, bch.k());
        auto cw = bch.encode(payload);
        BitString noisy = cw;
        std::set<std::uint64_t> flips;
        while (flips.size() < 2 * bch.t()) flips.insert(rng.below(bch.n()));
        for (auto f : flips) noisy.flip(f);
        auto decoded = bch.decode(noisy);
        if (!decoded || *decoded != payload) ++failures_or_wrong;
    }
    CHECK(failures_or_wrong == 20);
}

TEST_CASE("keyed permutation is a bijection with a working inverse") {
    KeyedPermutation perm(1000, 0x123456789abcdefULL);
    std::set<std::uint64_t> image;
    for (std::uint64_t x = 0; x < 1000; ++x) {
        const auto y = perm.forward(x);
        REQUIRE(y < 1000);
        CHECK(perm.inverse(y) == x);
        image.insert(y);
    }
    CHECK(image.size() == 1000);
}

TEST_CASE("key generation and serialization") {
    auto sk = generate_key(128);
    CHECK(sk.lambda == 128);
    // 128-bit seeds: 16 active bytes.
    bool nonzero = false;
    for (int i = 0; i < 16; ++i) nonzero = nonzero || sk.perm_seed[i];
    CHECK(nonzero);
    for (int i = 16; i < 32; ++i) CHECK(sk.perm_seed[i] == 0);

    auto sk2 = generate_key(128);
    CHECK_FALSE(sk == sk2);

    CHECK_THROWS_AS(generate_key(8), InvalidInputError);

    auto bytes = sk.serialize();
    REQUIRE(bytes.size() == 69);
    CHECK(bytes[0] == 0x01);
    CHECK(SecretKey::deserialize(bytes) == sk);
}

TEST_CASE("private code round trip and exact rate") {
    auto params = PrivateCodeParams::from_lambda(64, 256);
    PrivateCode code(params);
    CHECK(params.m == 63);
    CHECK(params.block_len == 255);
    CHECK(params.padded_k == 315);
    CHECK(params.K == 315 * 255 / 63);
    // K / padded_k equals block_len / m exactly.
    CHECK(params.K * params.m == params.padded_k * params.block_len);

    Rng rng(0x1111u);
    auto sk = generate_key(64, rng);
    auto x = random_bits(rng, params.k);
    auto y = code.encode(x, sk);
    REQUIRE(y.size() == params.K);

    QueryOracle oracle(y);
    for (std::size_t i = 0; i < params.k; ++i) {
        auto bit = code.local_decode(oracle, i, sk);
        REQUIRE(bit.has_value());
        REQUIRE(*bit == x.get(i));
    }
}

TEST_CASE("local decode charges exactly ell queries") {
    auto params = PrivateCodeParams::from_lambda(64, 100);
    PrivateCode code(params);
    Rng rng(0x2222u);
    auto sk = generate_key(64, rng);
    auto x = random_bits(rng, params.k);
    auto y = code.encode(x, sk);
    QueryOracle oracle(y);
    for (std::size_t i : {std::size_t{0}, std::size_t{50}, std::size_t{99}}) {
        const auto before = oracle.query_count();
        code.local_decode(oracle, i, sk);
        CHECK(oracle.query_count() - before == params.ell);
    }
}

TEST_CASE("same message under two keys: codewords near distance 1/2") {
    auto params = PrivateCodeParams::from_lambda(64, 63);
    PrivateCode code(params);
    Rng rng(0x3333u);
    auto x = random_bits(rng, params.k);
    for (int pair = 0; pair < 100; ++pair) {
        auto a = generate_key(64, rng);
        auto b = generate_key(64, rng);
        auto da = code.encode(x, a);
        auto db = code.encode(x, b);
        const double d = hamming_fractional(da, db).to_double();
        CHECK(d > 0.45);
        CHECK(d < 0.55);
    }
}

TEST_CASE("random corruption below rho/2 decodes every index") {
    auto params = PrivateCodeParams::from_lambda(64, 1024);
    PrivateCode code(params);
    Rng rng(0x4444u);
    int bad = 0;
    const int trials = 50;
    for (int trial = 0; trial < trials; ++trial) {
        auto sk = generate_key(64, rng);
        auto x = random_bits(rng, params.k);
        auto y = code.encode(x, sk);
        const std::size_t flips = static_cast<std::size_t>(params.rho / 2 * params.K);
        std::set<std::uint64_t> pos;
        while (pos.size() < flips) pos.insert(rng.below(params.K));
        for (auto f : pos) y.flip(f);
        QueryOracle oracle(y);
        for (std::size_t b = 0; b < params.num_blocks(); ++b) {
            auto blk = code.decode_block(oracle, b, sk);
            if (!blk.ok) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("key-aware whole-block flip defeats exactly the targeted block") {
    auto params = PrivateCodeParams::from_lambda(64, 189);  // 3 blocks
    PrivateCode code(params);
    Rng rng(0x5555u);
    auto sk = generate_key(64, rng);
    auto x = random_bits(rng, params.k);
    auto y = code.encode(x, sk);
    for (auto pos : code.block_positions(1, sk)) y.flip(pos);
    QueryOracle oracle(y);
    for (std::size_t i = 0; i < params.k; ++i) {
        auto bit = code.local_decode(oracle, i, sk);
        const std::size_t block = i / params.m;
        if (block == 1) {
            const bool wrong = !bit.has_value() || *bit != x.get(i);
            CHECK(wrong);
        } else {
            REQUIRE(bit.has_value());
            CHECK(*bit == x.get(i));
        }
    }
}

TEST_CASE("key blindness: fixed-window scanner finds block positions at chance rate") {
    auto params = PrivateCodeParams::from_lambda(64, 252);  // 4 blocks
    PrivateCode code(params);
    Rng rng(0x6666u);
    const double chance = static_cast<double>(params.ell) / static_cast<double>(params.K);
    const int keys = 400;
    double total_rate = 0.0;
    for (int trial = 0; trial < keys; ++trial) {
        auto sk = generate_key(64, rng);
        auto positions = code.block_positions(0, sk);
        // Scanner guesses the first ell positions of the word.
        std::size_t hits = 0;
        for (auto p : positions) hits += (p < params.ell);
        total_rate += static_cast<double>(hits) / static_cast<double>(params.ell);
    }
    const double mean_rate = total_rate / keys;
    // Chance rate plus three standard errors of the mean.
    const double sigma = std::sqrt(chance * (1 - chance) / (params.ell * static_cast<double>(keys)));
    CHECK(mean_rate <= chance + 3 * sigma);
}
