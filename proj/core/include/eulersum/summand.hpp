#ifndef EULERSUM_SUMMAND_HPP
#define EULERSUM_SUMMAND_HPP

#include <string>

#include "eulersum/rational.hpp"
#include "eulersum/real.hpp"

namespace eulersum {

/// Closed-form summand z(x) with exact derivatives and a fixed antiderivative
/// convention:
///   Power(c): z = x^c, F = x^(c+1)/(c+1), except F = ln x for c = -1.
///   Log:      z = ln x, F = x ln x - x.
class SummandFamily {
public:
    enum class Kind { power, log };

    static SummandFamily power(long exponent); // c != 0
    static SummandFamily log();

    Kind kind() const { return kind_; }
    long exponent() const; // power kind only

    /// Derivatives vanish beyond order c: the summation formula terminates.
    bool finite_series() const { return kind_ == Kind::power && exponent_ >= 1; }
    /// z and its derivatives are exact rationals at rational x (power kind).
    bool exact_at_rational() const { return kind_ == Kind::power; }
    /// The antiderivative is rational at rational x (power kind, c != -1).
    bool exact_antiderivative() const { return kind_ == Kind::power && exponent_ != -1; }

    Real value(const Real& x, const MathContext& ctx) const;
    /// j-th derivative at x; j = 0 is the value itself.
    Real derivative(unsigned long j, const Real& x, const MathContext& ctx) const;
    Real antiderivative(const Real& x, const MathContext& ctx) const;

    Rational value_q(const Rational& x) const;
    Rational derivative_q(unsigned long j, const Rational& x) const;
    Rational antiderivative_q(const Rational& x) const;

    std::string name() const;

private:
    SummandFamily(Kind k, long e) : kind_(k), exponent_(e) {}
    Kind kind_;
    long exponent_;
};

} // namespace eulersum

#endif
