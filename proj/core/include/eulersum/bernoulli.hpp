#ifndef EULERSUM_BERNOULLI_HPP
#define EULERSUM_BERNOULLI_HPP

#include <map>

#include "eulersum/rational.hpp"

namespace eulersum {

/// n-th coefficient of the raw summation-formula expansion
/// Sz = int z dx + a1*z + a2*z' + a3*z'' + ...,
/// built from the closed recursion
///   a_n = sum_{i=1}^{n-1} (-1)^(i+1) a_{n-i}/(i+1)! + (-1)^(n+1)/(n+1)!.
/// a1 = 1/2, a2 = 1/12, a3 = 0, a4 = -1/720, ...; even-indexed entries past
/// a2 alternate with zeros. n >= 1.
Rational em_coefficient(unsigned long n);

/// Modern signed B_order for even order >= 2 (B2 = 1/6, B4 = -1/30, ...).
/// Scaled from the coefficient recursion: B_{2k} = (2k)! * a_{2k}.
Rational bernoulli_number(unsigned long order);

/// Euler's positive table values: fraktur(k) = |B_{2k}|, k >= 1.
Rational fraktur(unsigned long k);

/// Closed form for sum_{i=1}^{n} i^c: coefficient of n^j keyed by j.
struct PowerSumPolynomial {
    unsigned long exponent = 0;
    std::map<unsigned long, Rational> coefficients;

    Rational eval(const Int& n) const;
    Rational coefficient_sum() const;
};

/// Bernoulli's sums-of-powers polynomial for exponent c >= 1.
PowerSumPolynomial power_sum_polynomial(unsigned long c);

/// Exact sum_{i=1}^{n} i^c (always an integer value).
Rational eval_power_sum(unsigned long c, const Int& n);

/// The rational q with zeta(2n) = q * pi^(2n):
/// q = (-1)^(n+1) B_{2n} 2^(2n-1) / (2n)!.
Rational zeta_even_rational(unsigned long n);

} // namespace eulersum

#endif
