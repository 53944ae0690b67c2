#pragma once

// Exact integer helpers for the places where a floating-point ceiling or
// logarithm would silently move a threshold by one.

#include "sepminor/rational.hpp"

#include <cstdint>

namespace sepminor::intmath {

std::uint64_t isqrt(std::uint64_t n);

/// Smallest integer k >= 0 with k >= base^x, i.e. ceil(base^x), for x >= 0.
std::uint64_t ceil_power(std::uint64_t base, const Rational& x);

/// Largest integer k >= 0 with k <= base^x, i.e. floor(base^x), for x >= 0.
std::uint64_t floor_power(std::uint64_t base, const Rational& x);

/// floor(2 * l * log2(n)) for n >= 1, l >= 1.
int floor_two_l_log2(std::uint64_t n, std::uint64_t l);

/// size <= n/l + 2 h^2 l log2(n), decided without rounding.
bool within_prs_bound(std::uint64_t size, std::uint64_t n, std::uint64_t l, std::uint64_t h);

/// Checked integer power; throws std::overflow_error past 2^63.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace sepminor::intmath
