#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idlc {

/**
 * Exact rational on machine integers. Distances consumed by game predicates
 * are compared as rationals so that thresholds never wobble on float error.
 */
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return a == b || a < b; }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }
};

/// Parses "0.05", "5/100", or "1" into an exact rational.
inline Fraction parse_fraction(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_fraction: empty");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t n = std::stoll(std::string(text.substr(0, slash)));
        std::int64_t d = std::stoll(std::string(text.substr(slash + 1)));
        return Fraction(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Fraction(std::stoll(std::string(text)), 1);
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.size() > 15) frac.resize(15);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    bool neg = !digits.empty() && digits[0] == '-';
    std::int64_t whole = digits.empty() || digits == "-" ? 0 : std::stoll(digits);
    std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
    std::int64_t num = whole * den + (neg ? -part : part);
    return Fraction(num, den);
}

}  // namespace idlc
