#include "idlc/bitstring.hpp"

namespace idlc {

BitString::BitString(std::size_t len, int fill) : words_((len + 63) / 64, 0), len_(len) {
    if (fill) {
        for (auto& w : words_) w = ~std::uint64_t{0};
        if (len_ & 63) words_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
    }
}

BitString BitString::from_string(std::string_view bits) {
    BitString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c != '0' && c != '1') throw InvalidInputError("BitString::from_string: expected 0/1");
        if (c == '1') out.set(i, 1);
    }
    return out;
}

BitString BitString::from_bools(const std::vector<std::uint8_t>& bits) {
    BitString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out.set(i, 1);
    return out;
}

void BitString::push_back(int bit) {
    if ((len_ & 63) == 0) words_.push_back(0);
    if (bit) words_[len_ >> 6] |= std::uint64_t{1} << (len_ & 63);
    ++len_;
}

void BitString::append(const BitString& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_back(other.get(i));
}

BitString BitString::slice(std::size_t pos, std::size_t count) const {
    if (pos > len_ || pos + count > len_)
        throw std::out_of_range("BitString::slice: range outside word");
    BitString out(count);
    for (std::size_t i = 0; i < count; ++i)
        if (get(pos + i)) out.set(i, 1);
    return out;
}

std::string BitString::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::uint8_t> BitString::to_bools() const {
    std::vector<std::uint8_t> v(len_);
    for (std::size_t i = 0; i < len_; ++i) v[i] = static_cast<std::uint8_t>(get(i));
    return v;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
    std::vector<std::uint8_t> out((len_ + 7) / 8, 0);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
    return out;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t len) {
    if (bytes.size() * 8 < len) throw InvalidInputError("BitString::from_bytes: too few bytes");
    BitString out(len);
    for (std::size_t i = 0; i < len; ++i)
        if ((bytes[i >> 3] >> (i & 7)) & 1u) out.set(i, 1);
    return out;
}

bool operator==(const BitString& a, const BitString& b) {
    if (a.len_ != b.len_) return false;
    return a.words_ == b.words_;
}

SymbolString::SymbolString(std::size_t len, std::uint32_t q) : syms_(len, 0), q_(q) {
    if (q < 2) throw InvalidInputError("SymbolString: alphabet size must be >= 2");
}

SymbolString::SymbolString(std::vector<std::uint32_t> symbols, std::uint32_t q)
    : syms_(std::move(symbols)), q_(q) {
    if (q < 2) throw InvalidInputError("SymbolString: alphabet size must be >= 2");
    for (auto v : syms_)
        if (v >= q_) throw InvalidInputError("SymbolString: symbol value outside alphabet");
}

SymbolString SymbolString::from_bits(const BitString& bits) {
    SymbolString out(bits.size(), 2);
    for (std::size_t i = 0; i < bits.size(); ++i) out.syms_[i] = static_cast<std::uint32_t>(bits.get(i));
    return out;
}

void SymbolString::set(std::size_t i, std::uint32_t v) {
    if (i >= syms_.size()) throw std::out_of_range("SymbolString::set");
    if (v >= q_) throw InvalidInputError("SymbolString::set: symbol value outside alphabet");
    syms_[i] = v;
}

BitString SymbolString::to_bits() const {
    if (q_ != 2) throw InvalidInputError("SymbolString::to_bits: alphabet is not binary");
    BitString out(syms_.size());
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (syms_[i]) out.set(i, 1);
    return out;
}

}  // namespace idlc
