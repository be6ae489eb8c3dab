#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linkinv {

// Exact arbitrary-precision rationals. Every coefficient in the library is
// one of these; there is no floating point anywhere in the algebra.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

} // namespace linkinv
