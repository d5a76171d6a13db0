#include "eulersum/rational.hpp"

#include "eulersum/errors.hpp"

namespace eulersum {

Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial_int(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e < 0 && base == 0)
        throw domain_error("pow_rational: zero base with negative exponent");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

Int falling_factorial(long c, unsigned long j) {
    Int r = 1;
    for (unsigned long i = 0; i < j; ++i) r *= Int(c - static_cast<long>(i));
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw domain_error("rational_from_string: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace eulersum
