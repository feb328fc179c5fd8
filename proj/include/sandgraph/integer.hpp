#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sandgraph {

/// Arbitrary-precision signed integer used for every count and matrix entry.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

/// base^exponent; 0^0 is 1.
Integer power(const Integer& base, unsigned long exponent);

/// base^exponent for an exponent given as an Integer (must be >= 0 and fit in unsigned long).
Integer power(const Integer& base, const Integer& exponent);

/// Binomial coefficient; zero when the lower index is negative or exceeds n.
Integer binomial(long n, long k);

/// Exact quotient; throws Error if divisor does not divide dividend.
Integer exact_quotient(const Integer& dividend, const Integer& divisor);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

bool is_prime(const Integer& p);

}  // namespace sandgraph
