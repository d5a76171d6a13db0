#ifndef EULERSUM_EM_HPP
#define EULERSUM_EM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulersum/real.hpp"
#include "eulersum/summand.hpp"

namespace eulersum {

enum class StopReason { smallest_term, epsilon_reached, series_terminated, budget_exhausted };
const char* to_string(StopReason r);

/// Value with a rigorous enclosure.
struct BracketedValue {
    Real lo, hi, mid, width;
    /// Set when the interval could not be narrowed to the requested tolerance
    /// because the asymptotic series itself ran out of decreasing terms.
    bool asymptotic_limit = false;

    bool contains(const Real& v) const { return lo <= v && v <= hi; }
    bool intersects(const BracketedValue& o) const { return lo <= o.hi && o.lo <= hi; }
};

BracketedValue make_bracket(const Real& a, const Real& b);
BracketedValue exact_bracket(const Real& v);
BracketedValue bracket_add(const BracketedValue& a, const BracketedValue& b);

/// Outcome of smallest-term truncation of an alternating series.
struct TruncationResult {
    std::vector<Real> terms;   // terms examined; index i holds term k = i+1
    long cut_index = -1;       // last included index (-1: nothing included)
    Real partial_before;       // sum through cut_index - 1
    Real partial_after;        // sum through cut_index
    StopReason reason = StopReason::smallest_term;

    long terms_used() const { return cut_index + 1; }
    /// Enclosure of the series' asymptotic value. Exact (width 0) when the
    /// series terminated.
    BracketedValue bracket() const;
};

/// k-th term, k >= 1; nullopt once the series has terminated.
using TermGenerator = std::function<std::optional<Real>(unsigned long k)>;

/// Keeps terms while |term| strictly decreases and |term| >= epsilon; stops at
/// the first violation or when `budget` terms have been examined. Throws
/// domain_error if consecutive nonzero terms fail to alternate in sign.
TruncationResult truncate_smallest(const TermGenerator& term_at, const Real& epsilon,
                                   unsigned long budget, long digits);
TruncationResult truncate_smallest(const std::vector<Real>& terms, const Real& epsilon);

/// k-th correction term B_{2k}/(2k)! * z^(2k-1)(x) with modern signed B_{2k}.
Real em_term(const SummandFamily& family, unsigned long k, const Real& x, const MathContext& ctx);
/// Exact variant (power families at rational x).
Rational em_term_q(const SummandFamily& family, unsigned long k, const Rational& x);

/// Anchor-determined constant C for a (family, antiderivative) pair.
struct EMConstant {
    SummandFamily family;
    BracketedValue value;
    std::string anchor;
    std::optional<Rational> exact; // present when the determination was exact
    long terms_used = 0;
    StopReason reason = StopReason::series_terminated;
};

struct EMOptions {
    std::optional<Real> epsilon;  // default 10^-(target_digits + 2)
    unsigned long budget = 0;     // 0 = auto: 2*ceil(pi*x) + 4
    long force_terms = -1;        // >= 0: use exactly this many correction terms
};

Real default_epsilon(const MathContext& ctx);
unsigned long default_budget(double x);

/// C = exact_prefix - F(x0) - z(x0)/2 - sum of truncated correction terms,
/// where exact_prefix = sum_{i=1}^{x0} z(i) supplied by the caller.
EMConstant em_constant(const SummandFamily& family, unsigned long anchor_x,
                       const Rational& exact_prefix, const MathContext& ctx,
                       const EMOptions& opt = {});
EMConstant em_constant(const SummandFamily& family, unsigned long anchor_x,
                       const Real& prefix, const MathContext& ctx, const EMOptions& opt = {});

struct TailResult {
    BracketedValue value;
    long terms_used = 0;
    StopReason reason = StopReason::smallest_term;
};

/// S(x) = C + F(x) + z(x)/2 + truncated correction sum, as an enclosure.
TailResult em_tail(const SummandFamily& family, const Real& x, const EMConstant& C,
                   const MathContext& ctx, const EMOptions& opt = {});

} // namespace eulersum

#endif
