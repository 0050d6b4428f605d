#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace abelcenter {

/// Arbitrary-precision exact rational. Always in lowest terms with a
/// positive denominator; zero is 0/1. cpp_rational maintains these
/// invariants on every operation, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// `num/den` in lowest terms, or a bare integer when den = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline long double to_long_double(const Rational& r) { return r.template convert_to<long double>(); }

}  // namespace abelcenter
