#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepminor {

/// Exact non-negative-denominator fraction. Used for densities, expansion
/// constants and exponents wherever a value is compared against a bound.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit by design of arithmetic types
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }
    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q" or "p"; decimal input such as "0.75" is converted exactly.
    static Rational parse(std::string_view text);
    [[nodiscard]] std::string str() const;

private:
    static Rational from_wide(__int128 num, __int128 den);
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace sepminor
