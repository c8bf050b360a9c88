#include "ramanujan/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace ramanujan {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer odd_double_factorial(long m) {
  Integer r = 1;
  for (long i = 1; i <= m; ++i) r *= 2 * i - 1;
  return r;
}

Integer multinomial(long n, std::span<const long> parts) {
  long sum = 0;
  Integer denom = 1;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("negative multinomial part");
    sum += p;
    denom *= factorial(p);
  }
  if (sum != n) throw std::invalid_argument("multinomial parts do not sum to n");
  Integer r = factorial(n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), denom.get_mpz_t());
  return r;
}

Integer catalan(long n) {
  Integer r = binomial(2 * n, n);
  Integer d = n + 1;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return r;
}

Integer narayana(long n, long k) {
  if (n <= 0) throw std::invalid_argument("narayana needs n >= 1");
  Integer r = binomial(n, k) * binomial(n, k - 1);
  Integer d = n;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return r;
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace ramanujan
