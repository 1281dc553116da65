#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace engstrom {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Always renders a denominator, e.g. "1/1", "21/13".
inline std::string to_fraction(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Exact decimal expansion of |r| truncated after `frac_digits` fractional
// digits, with sign. Deterministic byte-for-byte (no floating point).
std::string rat_to_decimal(const BigRat& r, int frac_digits);

}  // namespace engstrom
