#ifndef EULERSUM_REAL_HPP
#define EULERSUM_REAL_HPP

#include <mpfr.h>

#include <string>

#include "eulersum/rational.hpp"

namespace eulersum {

/// Precision request: results are reported at target_digits significant
/// decimal digits; internal work carries guard_digits extra.
struct MathContext {
    long target_digits = 18;
    long guard_digits = 10;

    long working_digits() const { return target_digits + guard_digits; }
    void validate() const; // throws domain_error on nonsense
};

/// Arbitrary-precision real with an explicit working precision in decimal
/// digits. Binary internals (MPFR), decimal rounding contract at the output
/// boundary; every operation rounds to nearest, ties to even.
class Real {
public:
    Real();                       // 0 at 18 digits
    explicit Real(long digits);   // 0 at the given precision
    Real(const Real&);
    Real(Real&&) noexcept;
    Real& operator=(const Real&);
    Real& operator=(Real&&) noexcept;
    ~Real();

    static Real of_long(long v, long digits);
    static Real of_int(const Int& v, long digits);
    static Real of_rational(const Rational& q, long digits);
    // Decimal string, point separator; a comma separator is accepted too
    // (Euler-style table data).
    static Real of_string(const std::string& s, long digits);

    long digits() const { return digits_; }
    /// Same value re-rounded at a new precision.
    Real at_digits(long digits) const;

    int sign() const;          // -1, 0, +1
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    Real abs() const;
    Real operator-() const;

    Real operator+(const Real&) const;
    Real operator-(const Real&) const;
    Real operator*(const Real&) const;
    Real operator/(const Real&) const;
    Real operator+(long) const;
    Real operator-(long) const;
    Real operator*(long) const;
    Real operator/(long) const;

    bool operator<(const Real&) const;
    bool operator<=(const Real&) const;
    bool operator>(const Real&) const;
    bool operator>=(const Real&) const;
    bool operator==(const Real&) const;
    bool operator!=(const Real&) const;

    Real pow_si(long e) const; // x^e, integer exponent
    Int floor_int() const;
    Int ceil_int() const;

    /// Round-half-even rendering at `sig_digits` significant digits.
    /// euler_style replaces the decimal point with a comma.
    std::string to_string(long sig_digits, bool euler_style = false) const;
    std::string to_string() const { return to_string(digits_); }
    /// Fixed-point rendering with `decimals` digits after the separator.
    std::string to_fixed(long decimals, bool euler_style = false) const;

    double to_double() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
    long digits_;
};

Real pi(const MathContext& ctx);
Real ln(const Real& x, const MathContext& ctx);     // x > 0
Real exp(const Real& x, const MathContext& ctx);
Real sqrt(const Real& x, const MathContext& ctx);   // x > 0
Real exp10(const Real& x, const MathContext& ctx);  // 10^x

/// 1/ln(10) = log10(e), the natural-to-common conversion factor.
Real log10_e(const MathContext& ctx);
/// Natural-log value -> common-log value (multiply by log10 e).
Real to_common(const Real& x, const MathContext& ctx);

/// One unit in the `digits`-th significant decimal digit of x (0 for x = 0).
Real ulp_decimal(const Real& x, long digits);

} // namespace eulersum

#endif
