#include "sepminor/bounds.hpp"

#include <stdexcept>

namespace sepminor {

BoundsTable bounds_table(const Rational& eps) {
    if (!(Rational(0) < eps && eps <= Rational(1)))
        throw std::invalid_argument("eps must lie in (0,1], got " + eps.str());
    const Rational one(1);
    const Rational half(1, 2);
    const Rational inv_two_eps = one / (Rational(2) * eps);
    BoundsTable t;
    t.eps = eps;
    t.b_lower = max(inv_two_eps - one, Rational(0));
    t.b_upper = eps >= half ? Rational(0) : inv_two_eps - half;
    t.big_b = one / eps - one;
    t.notes = "sandwich b_lower <= b'_eps <= b_eps <= b_upper; B'_eps = B_eps = B";
    if (eps >= half)
        t.notes += "; b'_eps = b_eps = 0";
    else
        t.notes += "; open: whether b'_eps = b_eps for eps < 1/2";
    return t;
}

}  // namespace sepminor
