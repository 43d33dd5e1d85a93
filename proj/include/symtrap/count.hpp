#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symtrap {

// Every multiplicity, dimension and group order is an arbitrary-precision
// integer so that factorials and binomials can never wrap.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Count factorial(int n);
Count binomial(int n, int k);

inline std::string to_string(const Count& c) { return c.str(); }

// Throws AlgorithmViolation when the value does not fit; used for loop bounds.
std::int64_t to_int64(const Count& c);

}  // namespace symtrap
