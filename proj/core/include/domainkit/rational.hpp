#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace domainkit {

// Exact rational scalar. The lattice/logic computations hinge on exact
// coordinate ties, so anything feeding them runs on Rational rather than
// double. Arbitrary precision keeps long projection/mixing pipelines safe.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace domainkit
