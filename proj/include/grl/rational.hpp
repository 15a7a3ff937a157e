#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace grl {

using Rational = boost::multiprecision::cpp_rational;

// Every finite double is a dyadic rational; this conversion is exact.
Rational exact_rational(double x);

// Parses "p/q", integers and plain decimals ("0.25", "-1.5e-3") exactly.
Rational parse_rational(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace grl
