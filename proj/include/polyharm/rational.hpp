#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "polyharm/errors.hpp"

namespace polyharm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, stored in lowest terms with positive denominator.
/// Conversions from double are exact (every finite double is dyadic).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Parses "num/den" or "num" (optionally signed). Exact; no decimal points.
Rational rat_parse(const std::string& s);

/// Canonical form: "num/den", or "num" when the denominator is 1.
std::string rat_to_string(const Rational& r);

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rat_from_double(double x) { return Rational(x); }

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace polyharm
