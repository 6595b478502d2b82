#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lowdim {

// All arithmetic in this library is exact. Integers are arbitrary precision,
// rationals are exact fractions; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Quotient rounded toward -infinity (C++ '/' truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Remainder of floor division; same sign as b, |r| < |b|.
inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int floor_rat(const Rat& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline int sign_of(const Int& a) { return a == 0 ? 0 : (a < 0 ? -1 : 1); }
inline int sign_of(const Rat& a) { return a == 0 ? 0 : (a < 0 ? -1 : 1); }

inline std::string to_dec(const Int& a) { return a.str(); }

}  // namespace lowdim
