#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polarsing {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// "a/b" in lowest terms, or just "a" when the denominator is one.
std::string format_rational(const Rational& r);

// Accepts "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

// Smallest integer >= num/den, den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace polarsing
