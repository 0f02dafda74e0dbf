#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace szego {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational positive_part(const Rational& x) {
    return x > 0 ? x : Rational(0);
}

// x^n for n >= 0 by binary powering.
inline Rational pow_nat(Rational base, unsigned n) {
    Rational r(1);
    while (n) {
        if (n & 1u) r *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt f(1);
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::string rational_str(const Rational& x) {
    return x.str();
}

}  // namespace szego
