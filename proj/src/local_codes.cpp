#include "idlc/local_codes.hpp"

#include <bit>

namespace idlc {

void LocalCodeSpec::validate() const {
    if (k < 1 || K < k) throw InvalidInputError("LocalCodeSpec: need K >= k >= 1");
    if (ell < 1) throw InvalidInputError("LocalCodeSpec: locality must be >= 1");
    if (rho < 0.0 || rho >= 0.5)
        throw InvalidInputError("LocalCodeSpec: unique decoding needs 0 <= rho < 1/2");
    if (p <= 0.5 || p > 1.0) throw InvalidInputError("LocalCodeSpec: need 1/2 < p <= 1");
}

HadamardCode::HadamardCode(std::size_t k, double rho, std::size_t repetitions)
    : repetitions_(repetitions) {
    if (k < 1 || k > kMaxMessageLen)
        throw InvalidInputError("HadamardCode: message length outside [1, 20]");
    spec_ = LocalCodeSpec{k, std::size_t{1} << k, 2, 2, 2, rho, 1.0 - 2.0 * rho};
    spec_.validate();
}

BitString HadamardCode::encode(const BitString& msg) const {
    if (msg.size() != spec_.k) throw LengthMismatchError("HadamardCode::encode: wrong length");
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < spec_.k; ++j)
        if (msg.get(j)) m |= (1u << j);
    BitString out(spec_.K);
    for (std::uint32_t a = 0; a < spec_.K; ++a)
        if (std::popcount(a & m) & 1u) out.set(a, 1);
    return out;
}

int HadamardCode::local_decode(const QueryOracle& oracle, std::size_t i, Rng& rng) const {
    if (i >= spec_.k) throw std::out_of_range("HadamardCode::local_decode: index");
    if (oracle.length() != spec_.K)
        throw LengthMismatchError("HadamardCode::local_decode: oracle length != 2^k");
    const std::uint64_t a = rng.below(spec_.K);
    const std::uint64_t b = a ^ (std::uint64_t{1} << i);
    return oracle.read(a) ^ oracle.read(b);
}

SymbolString HadamardCode::decode_all(const QueryOracle& oracle, Rng& rng) const {
    SymbolString out(spec_.k, 2);
    for (std::size_t i = 0; i < spec_.k; ++i) {
        std::size_t ones = 0;
        for (std::size_t r = 0; r < repetitions_; ++r) ones += local_decode(oracle, i, rng);
        out.set(i, ones * 2 > repetitions_ ? 1u : 0u);
    }
    return out;
}

}  // namespace idlc
