#include "idlc/bch.hpp"

#include <algorithm>

namespace idlc {

namespace {

// Multiply binary polynomials (index = power).
std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    }
    return out;
}

}  // namespace

BchCode::BchCode(unsigned field_m, unsigned t) : gf_(field_m), t_(t) {
    n_ = gf_.order();
    if (t < 1 || 2ull * t >= n_) throw InvalidInputError("BchCode: bad correction radius");

    // Generator = product of the distinct minimal polynomials of alpha^1..alpha^2t.
    std::vector<bool> covered(n_, false);
    std::vector<std::uint8_t> gen{1};
    for (std::uint32_t s = 1; s <= 2 * t; ++s) {
        if (covered[s % n_]) continue;
        // Cyclotomic coset of s under doubling mod n.
        std::vector<std::uint32_t> coset;
        std::uint32_t e = s % n_;
        while (!covered[e]) {
            covered[e] = true;
            coset.push_back(e);
            e = static_cast<std::uint32_t>((2ull * e) % n_);
        }
        // Minimal polynomial: prod (x + alpha^e) over the coset, computed in GF(2^m).
        std::vector<std::uint32_t> mp{1};
        for (std::uint32_t ce : coset) {
            std::vector<std::uint32_t> next(mp.size() + 1, 0);
            const std::uint32_t root = gf_.alpha_pow(ce);
            for (std::size_t i = 0; i < mp.size(); ++i) {
                next[i + 1] ^= mp[i];
                next[i] ^= gf_.mul(mp[i], root);
            }
            mp = std::move(next);
        }
        std::vector<std::uint8_t> mp2(mp.size());
        for (std::size_t i = 0; i < mp.size(); ++i) {
            if (mp[i] > 1) throw std::logic_error("BchCode: minimal polynomial not binary");
            mp2[i] = static_cast<std::uint8_t>(mp[i]);
        }
        gen = poly_mul_gf2(gen, mp2);
    }
    gen_ = std::move(gen);
    const std::size_t deg = gen_.size() - 1;
    if (deg >= n_) throw InvalidInputError("BchCode: generator degree exhausts the code");
    k_ = n_ - deg;
}

BitString BchCode::encode(const BitString& payload) const {
    if (payload.size() != k_) throw LengthMismatchError("BchCode::encode: payload length");
    const std::size_t r = n_ - k_;
    // Systematic LFSR division: data * x^r mod gen. reg[p] = coeff of x^p.
    std::vector<std::uint8_t> reg(r, 0);
    for (std::size_t j = 0; j < k_; ++j) {
        const std::uint8_t fb = static_cast<std::uint8_t>(payload.get(j)) ^ reg[r - 1];
        for (std::size_t p = r - 1; p > 0; --p) reg[p] = reg[p - 1];
        reg[0] = 0;
        if (fb)
            for (std::size_t p = 0; p < r; ++p) reg[p] ^= gen_[p];
    }
    BitString out(n_);
    for (std::size_t j = 0; j < k_; ++j)
        if (payload.get(j)) out.set(j, 1);
    // Codeword bit i carries coefficient x^(n-1-i); parity powers r-1..0.
    for (std::size_t p = 0; p < r; ++p)
        if (reg[p]) out.set(n_ - 1 - p, 1);
    return out;
}

std::optional<unsigned> BchCode::correct_in_place(BitString& word) const {
    if (word.size() != n_) throw LengthMismatchError("BchCode::decode: word length");
    // Powers of x carried by set bits.
    std::vector<std::uint32_t> set_powers;
    set_powers.reserve(n_ / 2);
    for (std::size_t i = 0; i < n_; ++i)
        if (word.get(i)) set_powers.push_back(static_cast<std::uint32_t>(n_ - 1 - i));

    const unsigned two_t = 2 * t_;
    std::vector<std::uint32_t> synd(two_t, 0);
    bool all_zero = true;
    for (unsigned e = 1; e <= two_t; ++e) {
        std::uint32_t acc = 0;
        for (std::uint32_t p : set_powers) acc ^= gf_.alpha_pow(static_cast<std::uint64_t>(e) * p);
        synd[e - 1] = acc;
        if (acc) all_zero = false;
    }
    if (all_zero) return 0;

    // Berlekamp-Massey over GF(2^m).
    std::vector<std::uint32_t> C{1}, B{1};
    std::uint32_t b = 1;
    unsigned L = 0, shift = 1;
    for (unsigned r = 0; r < two_t; ++r) {
        std::uint32_t d = synd[r];
        for (unsigned i = 1; i <= L && i < C.size(); ++i)
            if (C[i]) d ^= gf_.mul(C[i], synd[r - i]);
        if (d == 0) {
            ++shift;
        } else if (2 * L <= r) {
            std::vector<std::uint32_t> T = C;
            const std::uint32_t coef = gf_.div(d, b);
            if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                if (B[i]) C[i + shift] ^= gf_.mul(coef, B[i]);
            L = r + 1 - L;
            B = std::move(T);
            b = d;
            shift = 1;
        } else {
            const std::uint32_t coef = gf_.div(d, b);
            if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                if (B[i]) C[i + shift] ^= gf_.mul(coef, B[i]);
            ++shift;
        }
    }
    while (!C.empty() && C.back() == 0) C.pop_back();
    const unsigned nu = static_cast<unsigned>(C.size()) - 1;
    if (nu == 0 || nu > t_) return std::nullopt;

    // Chien search: sigma(alpha^e) == 0  =>  error at power (n - e) mod n.
    std::vector<std::size_t> error_positions;
    for (std::uint32_t e = 0; e < n_; ++e) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < C.size(); ++i)
            if (C[i]) acc ^= gf_.mul(C[i], gf_.alpha_pow(static_cast<std::uint64_t>(e) * i));
        if (acc == 0) {
            const std::uint32_t power = (n_ - e) % n_;
            error_positions.push_back(n_ - 1 - power);
        }
    }
    if (error_positions.size() != nu) return std::nullopt;

    for (std::size_t pos : error_positions) word.flip(pos);

    // Re-check: residual syndromes must vanish.
    for (unsigned e = 1; e <= two_t; ++e) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (word.get(i))
                acc ^= gf_.alpha_pow(static_cast<std::uint64_t>(e) * (n_ - 1 - i));
        if (acc != 0) return std::nullopt;
    }
    return nu;
}

std::optional<BitString> BchCode::decode(const BitString& word) const {
    BitString copy = word;
    if (!correct_in_place(copy)) return std::nullopt;
    return copy.slice(0, k_);
}

}  // namespace idlc
