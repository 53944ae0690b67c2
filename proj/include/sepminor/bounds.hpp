#pragma once

#include "sepminor/rational.hpp"

#include <string>

namespace sepminor {

/// Proven exponent bounds for hereditary classes with separators of order
/// Theta(n^(1-eps)): b_eps is the best lower exponent of nabla_G(r), B_eps
/// the best upper exponent. The same sandwich holds for the primed
/// variants (Omega- resp. O-constrained classes).
struct BoundsTable {
    Rational eps;
    Rational b_lower;
    Rational b_upper;
    Rational big_b;
    std::string notes;
};

/// b_lower = max(1/(2eps) - 1, 0); b_upper = 0 for eps >= 1/2, else
/// 1/(2eps) - 1/2; B = 1/eps - 1. Requires 0 < eps <= 1.
BoundsTable bounds_table(const Rational& eps);

}  // namespace sepminor
