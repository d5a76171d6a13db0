#include "eulersum/recip.hpp"

#include "eulersum/bernoulli.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

// Largest anchor for which prefixes are carried as exact rationals.
constexpr unsigned long kExactPrefixLimit = 10000;

} // namespace

Rational reciprocal_power_prefix(unsigned long s, unsigned long n) {
    Rational sum(0);
    for (unsigned long i = 1; i <= n; ++i)
        sum += Rational(1) / Rational(pow_int(Int(static_cast<long>(i)), s));
    return sum;
}

ZetaResult zeta_approx(unsigned long s, unsigned long anchor_x, const MathContext& ctx,
                       const EMOptions& opt) {
    ctx.validate();
    if (s <= 1) throw domain_error("zeta_approx: series diverges for s <= 1");
    if (anchor_x < 2) throw domain_error("zeta_approx: anchor_x must be >= 2");

    SummandFamily family = SummandFamily::power(-static_cast<long>(s));
    EMConstant c = [&] {
        if (anchor_x <= kExactPrefixLimit)
            return em_constant(family, anchor_x, reciprocal_power_prefix(s, anchor_x), ctx, opt);
        const long W = ctx.working_digits();
        Real prefix(W);
        for (unsigned long i = 1; i <= anchor_x; ++i)
            prefix = prefix + Real::of_long(static_cast<long>(i), W).pow_si(-static_cast<long>(s));
        return em_constant(family, anchor_x, prefix, ctx, opt);
    }();

    ZetaResult r;
    r.s = s;
    r.value = c.value;
    r.terms_used = c.terms_used;
    r.reason = c.reason;
    if (s % 2 == 0) r.exact_form = std::make_pair(zeta_even_rational(s / 2), s);
    return r;
}

GammaConstant euler_gamma(const MathContext& ctx, unsigned long anchor_x, const EMOptions& opt) {
    ctx.validate();
    if (anchor_x < 2) throw domain_error("euler_gamma: anchor_x must be >= 2");
    EMConstant c = em_constant(SummandFamily::power(-1), anchor_x,
                               reciprocal_power_prefix(1, anchor_x), ctx, opt);
    GammaConstant g;
    g.value = c.value;
    g.anchor_x = anchor_x;
    g.terms_used = c.terms_used;
    g.reason = c.reason;
    return g;
}

BracketedValue harmonic_sum(unsigned long n, const MathContext& ctx) {
    ctx.validate();
    if (n == 0) throw domain_error("harmonic_sum: n must be >= 1");
    if (n <= 100)
        return exact_bracket(
            Real::of_rational(reciprocal_power_prefix(1, n), ctx.working_digits()));

    EMConstant gamma = em_constant(SummandFamily::power(-1), 10, reciprocal_power_prefix(1, 10),
                                   ctx, EMOptions{});
    TailResult t = em_tail(SummandFamily::power(-1), Real::of_long(static_cast<long>(n), ctx.working_digits()),
                           gamma, ctx, EMOptions{});
    return t.value;
}

} // namespace eulersum
