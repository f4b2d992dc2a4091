#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace curvlab {

/// Arbitrary-precision exact rational. Curvature values never pass through
/// floating point; `to_double` exists only for display.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// "p/q" in lowest terms, "p" when q == 1 is NOT used: the wire format always
/// carries the slash so consumers can split unconditionally.
inline std::string to_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline int sign(const Rational& q) { return q.sign(); }

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace curvlab
