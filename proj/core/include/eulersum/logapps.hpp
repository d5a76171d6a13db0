#ifndef EULERSUM_LOGAPPS_HPP
#define EULERSUM_LOGAPPS_HPP

#include <optional>
#include <string>

#include "eulersum/em.hpp"

namespace eulersum {

enum class LogBase { natural, common };

struct LogSumResult {
    unsigned long x = 1;
    LogBase base = LogBase::natural;
    BracketedValue value;
    long terms_used = 0;
    StopReason reason = StopReason::smallest_term;
};

/// Enclosure of sum_{i<=x} ln i (or its common-log counterpart) via the
/// summation formula with the closed-form constant (1/2) ln 2 pi.
/// x = 0 returns exact 0 (empty product). force_terms >= 0 pins the number of
/// correction terms, as in the paper's worked examples.
LogSumResult log_factorial(unsigned long x, const MathContext& ctx,
                           LogBase base = LogBase::natural, long force_terms = -1);

/// Stirling approximation S(x, m): exp of the log-factorial series using
/// exactly m correction terms in the exponent. Working precision auto-scales
/// to the digit count of x! plus guard digits so bracket comparisons against
/// the exact integer are meaningful.
Real stirling_value(unsigned long x, unsigned long m, const MathContext& ctx);

struct FactorialDigits {
    unsigned long x = 1;
    unsigned long digit_count = 1;
    std::string leading_digits;
    long digits_certified = 0;
};

/// Digit count and bracket-certified leading digits of x!.
FactorialDigits factorial_digits(unsigned long x, const MathContext& ctx);

struct BracketReport {
    unsigned long x = 2;
    long m_low = -1;              // first m with a unique integer; -1 = none found
    long integers_in_bracket = 0; // count at m_low (or best seen on failure)
    std::optional<Int> unique_value;
};

/// Scans m through the strictly-decreasing-term range for the first m where
/// exactly one integer lies between S(x,m) and S(x,m+1). Failure is a report,
/// not an error.
BracketReport factorial_bracket_search(unsigned long x, const MathContext& ctx);

struct CentralBinomialResult {
    unsigned long m = 2;
    BracketedValue log_ratio;     // common log of 2^m / u, u = C(m, m/2)
    BracketedValue ratio;         // 2^m / u
    BracketedValue probability;   // u / 2^m
    long terms_used = 0;
    StopReason reason = StopReason::smallest_term;
};

/// Euler's merged central-binomial series for even m.
CentralBinomialResult central_binomial_log_ratio(unsigned long m, const MathContext& ctx,
                                                 const EMOptions& opt = {});

/// Magnitude of the k-th merged-series coefficient in the m-form:
/// (2^(2k) - 1) * fraktur(k) / ((2k-1)(2k)); the k-th series term is
/// (-1)^(k+1) times this over m^(2k-1).
Rational central_binomial_coefficient(unsigned long k);

/// The closed-form Euler-Maclaurin constant (1/2) ln 2 pi for the log family,
/// packaged for em_tail.
EMConstant stirling_constant(const MathContext& ctx);

} // namespace eulersum

#endif
