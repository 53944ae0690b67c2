#include "sepminor/intmath.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sepminor::intmath {

using boost::multiprecision::cpp_int;

namespace {

cpp_int big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(cpp_int(base), static_cast<unsigned>(exp));
}

void require_nonnegative(const Rational& x) {
    if (x.num() < 0) throw std::domain_error("negative exponent " + x.str());
}

// k^den compared against base^num.
int compare_power(std::uint64_t k, const Rational& x, const cpp_int& target) {
    const cpp_int lhs = big_pow(k, static_cast<std::uint64_t>(x.den()));
    if (lhs < target) return -1;
    if (lhs > target) return 1;
    return 0;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t ceil_power(std::uint64_t base, const Rational& x) {
    require_nonnegative(x);
    if (base <= 1 || x.num() == 0) return base == 0 && x.num() != 0 ? 0 : 1;
    const long double estimate = std::pow(static_cast<long double>(base), static_cast<long double>(x.to_double()));
    if (!(estimate < 9.0e18L)) throw std::overflow_error("ceil_power result too large");
    const cpp_int target = big_pow(base, static_cast<std::uint64_t>(x.num()));
    auto k = static_cast<std::uint64_t>(std::ceil(estimate));
    if (k == 0) k = 1;
    while (k > 1 && compare_power(k - 1, x, target) >= 0) --k;
    while (compare_power(k, x, target) < 0) ++k;
    return k;
}

std::uint64_t floor_power(std::uint64_t base, const Rational& x) {
    require_nonnegative(x);
    if (x.num() == 0) return 1;
    if (base <= 1) return base;
    const long double estimate = std::pow(static_cast<long double>(base), static_cast<long double>(x.to_double()));
    if (!(estimate < 9.0e18L)) throw std::overflow_error("floor_power result too large");
    const cpp_int target = big_pow(base, static_cast<std::uint64_t>(x.num()));
    auto k = static_cast<std::uint64_t>(std::floor(estimate));
    while (k > 0 && compare_power(k, x, target) > 0) --k;
    while (compare_power(k + 1, x, target) <= 0) ++k;
    return k;
}

int floor_two_l_log2(std::uint64_t n, std::uint64_t l) {
    if (n == 0 || l == 0) throw std::domain_error("floor_two_l_log2 needs n, l >= 1");
    // largest D with 2^D <= n^(2l) is the index of the top bit of n^(2l)
    const cpp_int p = big_pow(n, 2 * l);
    return static_cast<int>(boost::multiprecision::msb(p));
}

bool within_prs_bound(std::uint64_t size, std::uint64_t n, std::uint64_t l, std::uint64_t h) {
    if (n == 0 || l == 0) throw std::domain_error("within_prs_bound needs n, l >= 1");
    // size <= n/l + q log2 n with q = 2 h^2 l  <=>  2^(size*l - n) <= n^(q*l)
    const auto excess = static_cast<__int128>(size) * l - static_cast<__int128>(n);
    if (excess <= 0) return true;
    if (h == 0 || n == 1) return false;
    const std::uint64_t ql = 2 * h * h * l * l;
    const long double lhs = static_cast<long double>(excess);
    const long double rhs = static_cast<long double>(ql) * std::log2(static_cast<long double>(n));
    if (lhs < rhs * (1 - 1e-9L)) return true;
    if (lhs > rhs * (1 + 1e-9L)) return false;
    cpp_int two_pow = 1;
    two_pow <<= static_cast<unsigned>(excess);
    return two_pow <= big_pow(n, ql);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / base)
            throw std::overflow_error("integer power overflow");
        result *= base;
    }
    return result;
}

}  // namespace sepminor::intmath
