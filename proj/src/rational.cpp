#include "sepminor/rational.hpp"

#include <charconv>
#include <limits>

namespace sepminor {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return value;
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr auto lim = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
    if (num > lim || num < -lim || den > lim) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.size() > 15) throw std::invalid_argument("too many decimal digits: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const bool negative = !whole.empty() && whole.front() == '-';
        const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        const std::int64_t mag = (w < 0 ? -w : w) * scale + f;
        return Rational(negative ? -mag : mag, scale);
    }
    return Rational(parse_int(text));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace sepminor
