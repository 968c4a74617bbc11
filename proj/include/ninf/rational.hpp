#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ninf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "n" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational &q);

/// Inverse of to_string; throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(const std::string &text);

} // namespace ninf
