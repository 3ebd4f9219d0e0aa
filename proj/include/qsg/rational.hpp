#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace qsg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// "p/q" or "p"; whitespace is not accepted.
Rational parse_rational(const std::string& s);

// Integers print without denominator, otherwise "p/q".
std::string format_rational(const Rational& r);

// Exact square root, if the rational is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace qsg
