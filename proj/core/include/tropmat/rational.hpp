#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tropmat {

/// Exact rational arithmetic. Floating point is forbidden everywhere
/// except SVG rendering.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or a plain integer string. Throws
/// TropmatError(parse_error) on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form; integers print without the "/q" suffix.
std::string format_rational(const Rational& value);

}  // namespace tropmat
