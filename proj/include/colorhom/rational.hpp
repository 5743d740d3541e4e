#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace colorhom {

// Exact arbitrary-precision arithmetic. cpp_rational keeps the invariants we
// rely on everywhere: gcd(num, den) = 1 and den > 0, so equal values have
// equal representations.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Prints "p" or "p/q" with q > 0.
inline std::string rat_to_string(const Rational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

}  // namespace colorhom
