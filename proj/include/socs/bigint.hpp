#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace socs {

// Exact arbitrary-precision signed integer. Every arithmetic operation in
// this library is exact; nothing here may round.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational (used for balance ratios).
using Rational = boost::multiprecision::cpp_rational;

// floor(sqrt(n)). Throws std::domain_error for n < 0.
BigInt integer_sqrt(const BigInt& n);

// true iff integer_sqrt(n)^2 == n. Throws std::domain_error for n < 0.
bool is_perfect_square(const BigInt& n);

}  // namespace socs
