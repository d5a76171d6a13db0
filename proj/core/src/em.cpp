#include "eulersum/em.hpp"

#include <cmath>

#include "eulersum/bernoulli.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::smallest_term: return "smallest_term";
        case StopReason::epsilon_reached: return "epsilon_reached";
        case StopReason::series_terminated: return "series_terminated";
        case StopReason::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

BracketedValue make_bracket(const Real& a, const Real& b) {
    BracketedValue v;
    if (a <= b) {
        v.lo = a;
        v.hi = b;
    } else {
        v.lo = b;
        v.hi = a;
    }
    v.mid = (v.lo + v.hi) / 2;
    v.width = v.hi - v.lo;
    return v;
}

BracketedValue exact_bracket(const Real& v) {
    BracketedValue b;
    b.lo = v;
    b.hi = v;
    b.mid = v;
    b.width = Real(v.digits());
    return b;
}

BracketedValue bracket_add(const BracketedValue& a, const BracketedValue& b) {
    BracketedValue v = make_bracket(a.lo + b.lo, a.hi + b.hi);
    v.asymptotic_limit = a.asymptotic_limit || b.asymptotic_limit;
    return v;
}

BracketedValue TruncationResult::bracket() const {
    if (reason == StopReason::series_terminated) return exact_bracket(partial_after);
    if (cut_index < 0 && !terms.empty()) {
        // Nothing included: the value lies between 0 and the first term.
        return make_bracket(Real(partial_before.digits()), terms.front());
    }
    return make_bracket(partial_before, partial_after);
}

TruncationResult truncate_smallest(const TermGenerator& term_at, const Real& epsilon,
                                   unsigned long budget, long digits) {
    TruncationResult res;
    res.partial_before = Real(digits);
    res.partial_after = Real(digits);
    Real sum(digits);
    Real prev_abs(digits);
    int prev_sign = 0;

    for (unsigned long k = 1;; ++k) {
        if (k > budget) {
            res.reason = StopReason::budget_exhausted;
            break;
        }
        std::optional<Real> t = term_at(k);
        if (!t || t->is_zero()) {
            res.reason = StopReason::series_terminated;
            res.partial_before = sum;
            res.partial_after = sum;
            return res;
        }
        res.terms.push_back(*t);
        const int s = t->sign();
        if (prev_sign != 0 && s == prev_sign)
            throw domain_error("truncate_smallest: terms do not alternate in sign (invalid family)");
        prev_sign = s;

        const Real mag = t->abs();
        if (mag < epsilon) {
            res.reason = StopReason::epsilon_reached;
            break;
        }
        if (k > 1 && mag >= prev_abs) {
            res.reason = StopReason::smallest_term;
            break;
        }
        res.partial_before = sum;
        sum = sum + *t;
        res.partial_after = sum;
        res.cut_index = static_cast<long>(k) - 1;
        prev_abs = mag;
    }
    if (res.cut_index < 0) {
        res.partial_before = Real(digits);
        res.partial_after = Real(digits);
    }
    return res;
}

TruncationResult truncate_smallest(const std::vector<Real>& terms, const Real& epsilon) {
    long digits = terms.empty() ? 18 : terms.front().digits();
    return truncate_smallest(
        [&terms](unsigned long k) -> std::optional<Real> {
            if (k > terms.size()) return std::nullopt;
            return terms[k - 1];
        },
        epsilon, terms.size(), digits);
}

namespace {

// Exactly n terms, no stopping rule; used for table replays and S(x,m).
TruncationResult truncate_fixed(const TermGenerator& term_at, unsigned long n, long digits) {
    TruncationResult res;
    res.partial_before = Real(digits);
    res.partial_after = Real(digits);
    Real sum(digits);
    for (unsigned long k = 1; k <= n; ++k) {
        std::optional<Real> t = term_at(k);
        if (!t || t->is_zero()) {
            res.reason = StopReason::series_terminated;
            res.partial_before = sum;
            res.partial_after = sum;
            return res;
        }
        res.terms.push_back(*t);
        sum = sum + *t;
        res.cut_index = static_cast<long>(k) - 1;
    }
    // A forced term count asks for one specific partial sum, not an enclosure.
    res.partial_before = sum;
    res.partial_after = sum;
    res.reason = StopReason::budget_exhausted;
    return res;
}

TruncationResult run_truncation(const SummandFamily& family, const Real& x,
                                const MathContext& ctx, const EMOptions& opt) {
    const long W = ctx.working_digits();
    TermGenerator gen = [&family, &x, &ctx](unsigned long k) -> std::optional<Real> {
        if (family.finite_series() &&
            static_cast<long>(2 * k - 1) > family.exponent())
            return std::nullopt;
        return em_term(family, k, x, ctx);
    };
    if (opt.force_terms >= 0)
        return truncate_fixed(gen, static_cast<unsigned long>(opt.force_terms), W);
    const Real eps = opt.epsilon ? *opt.epsilon : default_epsilon(ctx);
    const unsigned long budget = opt.budget ? opt.budget : default_budget(x.to_double());
    return truncate_smallest(gen, eps, budget, W);
}

Real width_tolerance(const MathContext& ctx) {
    return Real::of_long(10, ctx.working_digits()).pow_si(-ctx.target_digits);
}

} // namespace

Real default_epsilon(const MathContext& ctx) {
    return Real::of_long(10, ctx.working_digits()).pow_si(-(ctx.target_digits + 2));
}

unsigned long default_budget(double x) {
    if (x < 1) x = 1;
    double b = 2.0 * std::ceil(3.141592653589793 * x) + 4.0;
    if (b > 1e6) b = 1e6;
    return b < 8 ? 8 : static_cast<unsigned long>(b);
}

Real em_term(const SummandFamily& family, unsigned long k, const Real& x,
             const MathContext& ctx) {
    if (k == 0) throw domain_error("em_term: k must be >= 1");
    if (x.sign() <= 0) throw domain_error("em_term: x must be positive");
    const long W = ctx.working_digits();
    if (family.kind() == SummandFamily::Kind::power) {
        const long c = family.exponent();
        Int ff = falling_factorial(c, 2 * k - 1);
        if (ff == 0) return Real(W);
        Rational coeff = bernoulli_number(2 * k) * Rational(ff) / Rational(factorial_int(2 * k));
        return Real::of_rational(coeff, W) * x.at_digits(W).pow_si(c - static_cast<long>(2 * k - 1));
    }
    // Log: term_k = B_{2k} / ((2k-1)(2k)) * x^(1-2k)
    Rational coeff = bernoulli_number(2 * k) /
                     Rational(static_cast<long>(2 * k - 1) * static_cast<long>(2 * k));
    return Real::of_rational(coeff, W) * x.at_digits(W).pow_si(1 - static_cast<long>(2 * k));
}

Rational em_term_q(const SummandFamily& family, unsigned long k, const Rational& x) {
    if (k == 0) throw domain_error("em_term_q: k must be >= 1");
    if (!family.exact_at_rational())
        throw domain_error("em_term_q: exact terms only for power families");
    const long c = family.exponent();
    Int ff = falling_factorial(c, 2 * k - 1);
    if (ff == 0) return Rational(0);
    return bernoulli_number(2 * k) * Rational(ff) / Rational(factorial_int(2 * k)) *
           pow_rational(x, c - static_cast<long>(2 * k - 1));
}

namespace {

EMConstant em_constant_impl(const SummandFamily& family, unsigned long anchor_x,
                            const std::optional<Rational>& prefix_q, const Real* prefix_r,
                            const MathContext& ctx, const EMOptions& opt) {
    ctx.validate();
    if (anchor_x < 1) throw domain_error("em_constant: anchor_x must be >= 1");

    if (family.finite_series() && prefix_q) {
        // Every quantity is rational: the constant is exact.
        Rational xq(static_cast<long>(anchor_x));
        Rational c = *prefix_q - family.antiderivative_q(xq) - family.value_q(xq) / 2;
        for (unsigned long k = 1; static_cast<long>(2 * k - 1) <= family.exponent(); ++k)
            c -= em_term_q(family, k, xq);
        long used = 0;
        for (unsigned long k = 1; static_cast<long>(2 * k - 1) <= family.exponent(); ++k) ++used;
        EMConstant result{family, exact_bracket(Real::of_rational(c, ctx.working_digits())),
                          "exact anchor x0=" + std::to_string(anchor_x), c, used,
                          StopReason::series_terminated};
        return result;
    }

    MathContext work = ctx;
    for (int attempt = 0;; ++attempt) {
        const long W = work.working_digits();
        Real xr = Real::of_long(static_cast<long>(anchor_x), W);
        Real prefix = prefix_q ? Real::of_rational(*prefix_q, W) : prefix_r->at_digits(W);
        Real base = prefix - family.antiderivative(xr, work) - family.value(xr, work) / 2;
        TruncationResult tr = run_truncation(family, xr, work, opt);
        BracketedValue bracket =
            (tr.reason == StopReason::series_terminated)
                ? exact_bracket(base - tr.partial_after)
                : make_bracket(base - tr.partial_before, base - tr.partial_after);
        if (bracket.width <= width_tolerance(ctx) || attempt >= 1) {
            if (bracket.width > width_tolerance(ctx)) bracket.asymptotic_limit = true;
            EMConstant result{family, bracket, "anchor x0=" + std::to_string(anchor_x),
                              std::nullopt, tr.terms_used(), tr.reason};
            return result;
        }
        work.guard_digits *= 2; // one escalation, then report honestly
    }
}

} // namespace

EMConstant em_constant(const SummandFamily& family, unsigned long anchor_x,
                       const Rational& exact_prefix, const MathContext& ctx,
                       const EMOptions& opt) {
    return em_constant_impl(family, anchor_x, exact_prefix, nullptr, ctx, opt);
}

EMConstant em_constant(const SummandFamily& family, unsigned long anchor_x, const Real& prefix,
                       const MathContext& ctx, const EMOptions& opt) {
    return em_constant_impl(family, anchor_x, std::nullopt, &prefix, ctx, opt);
}

TailResult em_tail(const SummandFamily& family, const Real& x, const EMConstant& C,
                   const MathContext& ctx, const EMOptions& opt) {
    ctx.validate();
    if (x < Real::of_long(1, x.digits())) throw domain_error("em_tail: x must be >= 1");

    if (family.finite_series() && C.exact && x.is_integer()) {
        Rational xq(x.floor_int());
        Rational s = *C.exact + family.antiderivative_q(xq) + family.value_q(xq) / 2;
        long used = 0;
        for (unsigned long k = 1; static_cast<long>(2 * k - 1) <= family.exponent(); ++k) {
            s += em_term_q(family, k, xq);
            ++used;
        }
        return {exact_bracket(Real::of_rational(s, ctx.working_digits())), used,
                StopReason::series_terminated};
    }

    MathContext work = ctx;
    for (int attempt = 0;; ++attempt) {
        const long W = work.working_digits();
        Real xr = x.at_digits(W);
        Real base = family.antiderivative(xr, work) + family.value(xr, work) / 2;
        TruncationResult tr = run_truncation(family, xr, work, opt);
        BracketedValue tail =
            (tr.reason == StopReason::series_terminated)
                ? exact_bracket(base + tr.partial_after)
                : make_bracket(base + tr.partial_before, base + tr.partial_after);
        BracketedValue total = bracket_add(C.value, tail);
        if (total.width <= width_tolerance(ctx) || attempt >= 1) {
            if (total.width > width_tolerance(ctx)) total.asymptotic_limit = true;
            return {total, tr.terms_used(), tr.reason};
        }
        work.guard_digits *= 2;
    }
}

} // namespace eulersum
