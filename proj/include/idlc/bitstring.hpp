#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idlc/errors.hpp"

namespace idlc {

/**
 * Packed variable-length binary word. Equality is positionwise over exactly
 * size() symbols; indexed reads outside [0, size()) throw.
 */
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t len, int fill = 0);

    static BitString from_string(std::string_view bits);  // e.g. "0101"
    static BitString from_bools(const std::vector<std::uint8_t>& bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    int get(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitString::get: index " + std::to_string(i));
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
    }

    void set(std::size_t i, int bit) {
        if (i >= len_) throw std::out_of_range("BitString::set: index " + std::to_string(i));
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (bit)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { set(i, 1 - get(i)); }

    void push_back(int bit);
    void append(const BitString& other);

    BitString slice(std::size_t pos, std::size_t count) const;

    std::string to_string() const;
    std::vector<std::uint8_t> to_bools() const;

    /// LSB-first byte packing; final partial byte zero-padded.
    std::vector<std::uint8_t> to_bytes() const;
    static BitString from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t len);

    friend bool operator==(const BitString& a, const BitString& b);
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;
};

/**
 * Word over an alphabet of size q. Symbol values are checked against q on
 * every write.
 */
class SymbolString {
public:
    SymbolString() = default;
    SymbolString(std::size_t len, std::uint32_t q);
    SymbolString(std::vector<std::uint32_t> symbols, std::uint32_t q);

    static SymbolString from_bits(const BitString& bits);  // q = 2

    std::size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }
    std::uint32_t q() const { return q_; }

    std::uint32_t get(std::size_t i) const {
        if (i >= syms_.size()) throw std::out_of_range("SymbolString::get");
        return syms_[i];
    }
    void set(std::size_t i, std::uint32_t v);

    BitString to_bits() const;  // requires q == 2

    const std::vector<std::uint32_t>& raw() const { return syms_; }

    friend bool operator==(const SymbolString& a, const SymbolString& b) {
        return a.q_ == b.q_ && a.syms_ == b.syms_;
    }
    friend bool operator!=(const SymbolString& a, const SymbolString& b) { return !(a == b); }

private:
    std::vector<std::uint32_t> syms_;
    std::uint32_t q_ = 2;
};

}  // namespace idlc
