#ifndef EULERSUM_RATIONAL_HPP
#define EULERSUM_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace eulersum {

// Exact arbitrary-size arithmetic. GMP canonicalizes to lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

Int factorial_int(unsigned long n);
Int binomial_int(unsigned long n, unsigned long k);
Int pow_int(const Int& base, unsigned long e);

// base^e for signed e (e < 0 requires base != 0).
Rational pow_rational(const Rational& base, long e);

// Falling factorial c(c-1)...(c-j+1) as an exact integer; j = 0 gives 1.
Int falling_factorial(long c, unsigned long j);

// "n/d" or "n" when d = 1.
std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

} // namespace eulersum

#endif
