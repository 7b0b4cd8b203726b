#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace etacolor {

/// Exact rational with a normalized sign (den > 0) and gcd-reduced terms.
/// Used wherever a fraction comparison must not suffer float ties, e.g.
/// "bad <= eta * total" checks and report fields.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

/// a <= q * b with exact integer cross-multiplication, all values non-negative.
inline bool leq_scaled(std::uint64_t a, const Rational& q, std::uint64_t b) {
    return static_cast<__int128>(a) * q.den <= static_cast<__int128>(q.num) * b;
}

/// Parses "num/den", a plain integer, or a decimal like "0.125".
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        }
        const auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::int64_t den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) {
            if (den > (INT64_MAX / 10)) throw std::invalid_argument("too many decimals");
            den *= 10;
        }
        return Rational(std::stoll(digits), den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

}  // namespace etacolor
