#pragma once

#include <span>

#include "ramanujan/poly.hpp"

namespace ramanujan {

Integer factorial(long n);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n
// (2m-1)!! = 1*3*...*(2m-1); odd_double_factorial(0) == 1
Integer odd_double_factorial(long m);
// parts must be nonnegative and sum to n
Integer multinomial(long n, std::span<const long> parts);
Integer catalan(long n);
// (1/n) C(n,k) C(n,k-1)
Integer narayana(long n, long k);
Integer power(const Integer& base, unsigned long e);

}  // namespace ramanujan
