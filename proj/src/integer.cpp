#include "sandgraph/integer.hpp"

#include "sandgraph/error.hpp"

namespace sandgraph {

Integer power(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer power(const Integer& base, const Integer& exponent) {
  if (exponent < 0) throw Error("negative exponent " + to_decimal(exponent));
  if (!exponent.fits_ulong_p()) throw Error("exponent too large: " + to_decimal(exponent));
  return power(base, exponent.get_ui());
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer exact_quotient(const Integer& dividend, const Integer& divisor) {
  if (divisor == 0) throw Error("division by zero");
  if (!mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t())) {
    throw Error("inexact division: " + to_decimal(dividend) + " / " + to_decimal(divisor));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  // Deterministic for the small primes this library is used with; 40 rounds otherwise.
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

}  // namespace sandgraph
