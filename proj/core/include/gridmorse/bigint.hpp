#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gridmorse {

// All counts and polynomial coefficients in this library are exact.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace gridmorse
