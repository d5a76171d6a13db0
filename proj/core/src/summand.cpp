#include "eulersum/summand.hpp"

#include "eulersum/errors.hpp"

namespace eulersum {

SummandFamily SummandFamily::power(long exponent) {
    if (exponent == 0) throw domain_error("SummandFamily::power: exponent must be nonzero");
    return SummandFamily(Kind::power, exponent);
}

SummandFamily SummandFamily::log() { return SummandFamily(Kind::log, 0); }

long SummandFamily::exponent() const {
    if (kind_ != Kind::power) throw domain_error("exponent(): not a power family");
    return exponent_;
}

Real SummandFamily::value(const Real& x, const MathContext& ctx) const {
    return derivative(0, x, ctx);
}

Real SummandFamily::derivative(unsigned long j, const Real& x, const MathContext& ctx) const {
    if (x.sign() <= 0) throw domain_error("derivative: x must be positive");
    const long W = ctx.working_digits();
    if (kind_ == Kind::power) {
        Int ff = falling_factorial(exponent_, j);
        if (ff == 0) return Real(W);
        return Real::of_int(ff, W) * x.at_digits(W).pow_si(exponent_ - static_cast<long>(j));
    }
    // Log: z = ln x; z^(j) = (-1)^(j-1) (j-1)! x^(-j) for j >= 1
    if (j == 0) return ln(x, ctx);
    Real d = Real::of_int(factorial_int(j - 1), W) * x.at_digits(W).pow_si(-static_cast<long>(j));
    return (j % 2 == 1) ? d : -d;
}

Real SummandFamily::antiderivative(const Real& x, const MathContext& ctx) const {
    if (x.sign() <= 0) throw domain_error("antiderivative: x must be positive");
    const long W = ctx.working_digits();
    if (kind_ == Kind::power) {
        if (exponent_ == -1) return ln(x, ctx);
        return x.at_digits(W).pow_si(exponent_ + 1) / (exponent_ + 1);
    }
    Real lx = ln(x, ctx);
    return x.at_digits(W) * lx - x.at_digits(W);
}

Rational SummandFamily::value_q(const Rational& x) const { return derivative_q(0, x); }

Rational SummandFamily::derivative_q(unsigned long j, const Rational& x) const {
    if (!exact_at_rational())
        throw domain_error("derivative_q: exact evaluation only for power families");
    if (x <= 0) throw domain_error("derivative_q: x must be positive");
    Int ff = falling_factorial(exponent_, j);
    if (ff == 0) return Rational(0);
    return Rational(ff) * pow_rational(x, exponent_ - static_cast<long>(j));
}

Rational SummandFamily::antiderivative_q(const Rational& x) const {
    if (!exact_antiderivative())
        throw domain_error("antiderivative_q: not rational for this family");
    if (x <= 0) throw domain_error("antiderivative_q: x must be positive");
    return pow_rational(x, exponent_ + 1) / Rational(exponent_ + 1);
}

std::string SummandFamily::name() const {
    if (kind_ == Kind::log) return "log";
    return "power(" + std::to_string(exponent_) + ")";
}

} // namespace eulersum
