#ifndef EULERSUM_RECIP_HPP
#define EULERSUM_RECIP_HPP

#include <optional>
#include <utility>

#include "eulersum/em.hpp"

namespace eulersum {

struct ZetaResult {
    unsigned long s = 2;
    BracketedValue value;
    /// (q, 2n) with zeta(s) = q * pi^(2n), present for even s.
    std::optional<std::pair<Rational, unsigned long>> exact_form;
    long terms_used = 0;
    StopReason reason = StopReason::smallest_term;
};

/// zeta(s) for integer s >= 2 as the Euler-Maclaurin constant of
/// z = x^(-s) anchored at anchor_x (all x-dependent terms vanish at infinity).
ZetaResult zeta_approx(unsigned long s, unsigned long anchor_x, const MathContext& ctx,
                       const EMOptions& opt = {});

/// H_n; exact rational (width 0) for n <= 100, otherwise via gamma + ln n +
/// the Euler-Maclaurin tail of z = 1/x.
BracketedValue harmonic_sum(unsigned long n, const MathContext& ctx);

struct GammaConstant {
    BracketedValue value;
    unsigned long anchor_x = 10;
    long terms_used = 0;
    StopReason reason = StopReason::smallest_term;
};

/// The Euler-Mascheroni constant: the Euler-Maclaurin constant of z = 1/x
/// with antiderivative ln x, anchored with an exact rational prefix.
GammaConstant euler_gamma(const MathContext& ctx, unsigned long anchor_x = 10,
                          const EMOptions& opt = {});

/// Exact rational partial sum sum_{i=1}^{n} 1/i^s (intended for modest n).
Rational reciprocal_power_prefix(unsigned long s, unsigned long n);

} // namespace eulersum

#endif
