#include "eulersum/logapps.hpp"

#include <algorithm>
#include <utility>

#include "eulersum/bernoulli.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

BracketedValue scale_bracket(const BracketedValue& b, const Real& positive_factor) {
    BracketedValue r = make_bracket(b.lo * positive_factor, b.hi * positive_factor);
    r.asymptotic_limit = b.asymptotic_limit;
    return r;
}

// Natural-log Stirling exponent with exactly m correction terms:
// (1/2)ln 2pi + (x + 1/2)ln x - x + sum_{k<=m} fraktur-term.
Real stirling_exponent(unsigned long x, unsigned long m, const MathContext& ctx) {
    const long W = ctx.working_digits();
    Real xr = Real::of_long(static_cast<long>(x), W);
    Real two_pi = pi(MathContext{W, 10}) * 2;
    Real e = ln(two_pi, ctx) / 2 + (xr + Real::of_rational(Rational(1, 2), W)) * ln(xr, ctx) - xr;
    SummandFamily fam = SummandFamily::log();
    for (unsigned long k = 1; k <= m; ++k) e = e + em_term(fam, k, xr, ctx);
    return e;
}

unsigned long factorial_digit_count(unsigned long x, const MathContext& ctx) {
    return factorial_digits(x, ctx).digit_count;
}

} // namespace

EMConstant stirling_constant(const MathContext& ctx) {
    const long W = ctx.working_digits();
    Real two_pi = pi(MathContext{W, 10}) * 2;
    Real c = ln(two_pi, MathContext{W, 10}) / 2;
    return EMConstant{SummandFamily::log(), exact_bracket(c.at_digits(W)),
                      "closed form (1/2) ln 2 pi", std::nullopt, 0,
                      StopReason::series_terminated};
}

LogSumResult log_factorial(unsigned long x, const MathContext& ctx, LogBase base,
                           long force_terms) {
    ctx.validate();
    LogSumResult res;
    res.x = x;
    res.base = base;
    if (x == 0) {
        res.value = exact_bracket(Real(ctx.working_digits()));
        res.reason = StopReason::series_terminated;
        return res;
    }
    EMOptions opt;
    opt.force_terms = force_terms;
    TailResult t = em_tail(SummandFamily::log(),
                           Real::of_long(static_cast<long>(x), ctx.working_digits()),
                           stirling_constant(ctx), ctx, opt);
    res.value = t.value;
    res.terms_used = t.terms_used;
    res.reason = t.reason;
    if (base == LogBase::common) res.value = scale_bracket(res.value, log10_e(ctx));
    return res;
}

Real stirling_value(unsigned long x, unsigned long m, const MathContext& ctx) {
    ctx.validate();
    if (x < 1) throw domain_error("stirling_value: x must be >= 1");
    if (m > default_budget(static_cast<double>(x)))
        throw domain_error("stirling_value: m exceeds the term budget");
    unsigned long dc = factorial_digit_count(x, MathContext{30, 10});
    MathContext work{static_cast<long>(dc) + ctx.guard_digits + 30, 10};
    return exp(stirling_exponent(x, m, work), work);
}

FactorialDigits factorial_digits(unsigned long x, const MathContext& ctx) {
    ctx.validate();
    if (x < 1) throw domain_error("factorial_digits: x must be >= 1");

    FactorialDigits res;
    res.x = x;

    if (x < 8) {
        // Below the useful range of the asymptotic series; the factorial is
        // trivially exact.
        std::string s = factorial_int(x).get_str();
        res.digit_count = s.size();
        res.digits_certified = static_cast<long>(s.size());
        res.leading_digits = s.substr(
            0, std::min<size_t>(s.size(), static_cast<size_t>(ctx.target_digits)));
        return res;
    }

    LogSumResult ls = log_factorial(x, ctx, LogBase::common);
    Int fl = ls.value.lo.floor_int();
    if (fl != ls.value.hi.floor_int())
        throw precision_error(
            "factorial_digits: bracket straddles an integer power of ten; raise precision");
    res.digit_count = mpz_get_ui(fl.get_mpz_t()) + 1;

    const long W = ctx.working_digits();
    Real floor_r = Real::of_int(fl, W);
    Real lead_lo = exp10(ls.value.lo - floor_r, ctx);
    Real lead_hi = exp10(ls.value.hi - floor_r, ctx);
    // Fixed-point rendering: the leading value sits in [1, 10), and trailing
    // zeros are significant here (cf. 3628800).
    std::string slo = lead_lo.to_fixed(ctx.target_digits);
    std::string shi = lead_hi.to_fixed(ctx.target_digits);

    std::string digits_lo, digits_hi;
    for (char c : slo)
        if (c >= '0' && c <= '9') digits_lo += c;
    for (char c : shi)
        if (c >= '0' && c <= '9') digits_hi += c;
    size_t common = 0;
    while (common < digits_lo.size() && common < digits_hi.size() &&
           digits_lo[common] == digits_hi[common])
        ++common;
    res.digits_certified = static_cast<long>(common);

    size_t len = std::min<size_t>({common, static_cast<size_t>(res.digit_count),
                                   static_cast<size_t>(ctx.target_digits)});
    res.leading_digits = digits_lo.substr(0, len);
    return res;
}

BracketReport factorial_bracket_search(unsigned long x, const MathContext& ctx) {
    ctx.validate();
    if (x < 2) throw domain_error("factorial_bracket_search: x must be >= 2");

    BracketReport rep;
    rep.x = x;

    unsigned long dc = factorial_digit_count(x, MathContext{30, 10});
    // Integer-counting needs absolute resolution well below the S(x,m) gap.
    MathContext work{static_cast<long>(dc) + 50, 10};
    const long W = work.working_digits();
    Real xr = Real::of_long(static_cast<long>(x), W);
    SummandFamily fam = SummandFamily::log();

    Real base = stirling_exponent(x, 0, work);
    Real prev_term = em_term(fam, 1, xr, work);
    Real e_m = base + prev_term; // exponent with m = 1 terms
    Int exact = factorial_int(x);
    long best_count = -1;

    for (unsigned long m = 1;; ++m) {
        Real next_term = em_term(fam, m + 1, xr, work);
        if (next_term.abs() >= prev_term.abs()) break; // left the decreasing range
        Real e_next = e_m + next_term;
        Real s_m = exp(e_m, work);
        Real s_next = exp(e_next, work);
        if (s_next < s_m) std::swap(s_m, s_next);
        Int count = s_next.ceil_int() - s_m.floor_int() - 1;
        long c = static_cast<long>(mpz_get_si(count.get_mpz_t()));
        if (best_count < 0 || c < best_count) best_count = c;
        if (c == 1) {
            Int unique = s_m.floor_int() + 1;
            rep.m_low = static_cast<long>(m);
            rep.integers_in_bracket = 1;
            rep.unique_value = unique;
            if (unique != exact)
                throw precision_error(
                    "factorial_bracket_search: bracketed integer disagrees with x!");
            return rep;
        }
        e_m = e_next;
        prev_term = next_term;
    }
    rep.m_low = -1;
    rep.integers_in_bracket = best_count;
    return rep;
}

Rational central_binomial_coefficient(unsigned long k) {
    if (k == 0) throw domain_error("central_binomial_coefficient: k must be >= 1");
    Rational mult = Rational(pow_int(Int(2), 2 * k)) - 1;
    return mult * fraktur(k) /
           Rational(static_cast<long>(2 * k - 1) * static_cast<long>(2 * k));
}

CentralBinomialResult central_binomial_log_ratio(unsigned long m, const MathContext& ctx,
                                                 const EMOptions& opt) {
    ctx.validate();
    if (m < 2 || m % 2 != 0)
        throw domain_error("central_binomial_log_ratio: m must be even and >= 2");

    const long W = ctx.working_digits();
    Real mr = Real::of_long(static_cast<long>(m), W);
    MathContext work{W, 10};

    // ln(2^m/u) = (1/2) ln(m pi / 2) + sum_k (-1)^(k+1) c_k / m^(2k-1)
    TermGenerator gen = [&](unsigned long k) -> std::optional<Real> {
        Real t = Real::of_rational(central_binomial_coefficient(k), W) *
                 mr.pow_si(1 - static_cast<long>(2 * k));
        return (k % 2 == 1) ? t : -t;
    };
    const Real eps = opt.epsilon ? *opt.epsilon : default_epsilon(ctx);
    const unsigned long budget = opt.budget ? opt.budget : default_budget(m / 2.0);
    TruncationResult tr = truncate_smallest(gen, eps, budget, W);

    Real base = ln(mr * pi(MathContext{W, 10}) / 2, work) / 2;
    BracketedValue natural = bracket_add(exact_bracket(base), tr.bracket());

    CentralBinomialResult res;
    res.m = m;
    res.terms_used = tr.terms_used();
    res.reason = tr.reason;
    res.log_ratio = scale_bracket(natural, log10_e(ctx));
    res.ratio = make_bracket(exp(natural.lo, work), exp(natural.hi, work));
    res.probability = make_bracket(Real::of_long(1, W) / res.ratio.hi,
                                   Real::of_long(1, W) / res.ratio.lo);
    return res;
}

} // namespace eulersum
