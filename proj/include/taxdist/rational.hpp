#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace taxdist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every finite double is a dyadic rational).
Rational to_rational(double value);

} // namespace taxdist
