#include "eulersum/replay.hpp"

#include <algorithm>

#include "eulersum/bernoulli.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/recip.hpp"

namespace eulersum {

namespace {

const std::vector<std::pair<std::string, std::string>> kTable149 = {
    {"s", "1,549767731166540690"},
    {"add 1/x", "0,1"},
    {"subtr. 1/2xx", "0,005"},
    {"add A/x^3", "0,000166666666666666"},
    {"subtr. B/x^5", "0,000000333333333333"},
    {"add C/x^7", "0,000000002380952381"},
    {"subtr. D/x^9", "0,000000000033333333"},
    {"add E/x^11", "0,000000000000757575"},
    {"subtr. F/x^13", "0,000000000000025311"},
    {"add G/x^15", "0,000000000000001166"},
    {"subtr. H/x^17", "0,000000000000000071"},
    {"C", "1,644934066848226430"},
};

const std::vector<std::pair<std::string, std::string>> kTable159 = {
    {"lx", "3,0000000000000"},
    {"xlx", "3000,0000000000000"},
    {"(1/2)lx", "1,5000000000000"},
    {"(1/2)l2pi", "0,3990899341790"},
    {"subtotal", "3001,8990899341790"},
    {"subtr. nx", "434,2944819032518"},
    {"after subtraction", "2567,6046080309272"},
    {"nA/(1*2x)", "0,0000361912068"},
    {"subtr. nB/(3*4x^3)", "0,0000000000012"},
    {"term sum", "0,0000361912056"},
    {"s", "2567,6046442221328"},
};

const std::vector<std::pair<std::string, std::string>> kTable162 = {
    {"k/4m", "0,0010857362"},
    {"subtr. k/24m^3", "0,0000000181"},
    {"term sum", "0,0010857181"},
    {"l pi", "0,4971498726"},
    {"l m/2", "1,6989700043"},
    {"l (m/2)pi", "2,1961198769"},
    {"l sqrt((m/2)pi)", "1,0980599384"},
    {"add corrections", "0,0010857181"},
    {"l 2^100/u", "1,0991456565"},
    {"2^100/u", "12,56451"},
};

long decimals_of(const std::string& printed) {
    auto pos = printed.find(',');
    if (pos == std::string::npos) return 0;
    return static_cast<long>(printed.size() - pos - 1);
}

ReplayLine check_line(const std::pair<std::string, std::string>& fixture, const Real& computed,
                      long work_digits) {
    ReplayLine line;
    line.label = fixture.first;
    line.expected = fixture.second;
    const long dec = decimals_of(fixture.second);
    line.computed = computed.to_fixed(dec, /*euler_style=*/true);
    Real expected = Real::of_string(fixture.second, work_digits);
    Real tol = Real::of_long(2, work_digits) * Real::of_long(10, work_digits).pow_si(-dec);
    line.match = (computed - expected).abs() <= tol;
    return line;
}

ReplayReport replay_149(const MathContext& ctx) {
    const long W = std::max(ctx.working_digits(), 40L);
    ReplayReport rep;
    rep.section = 149;

    Rational prefix = reciprocal_power_prefix(2, 10);
    std::vector<Rational> values = {prefix, Rational(1, 10), Rational(1, 200)};
    Rational c = prefix + Rational(1, 10) - Rational(1, 200);
    for (unsigned long k = 1; k <= 8; ++k) {
        Rational mag = fraktur(k) / Rational(pow_int(Int(10), 2 * k + 1));
        values.push_back(mag);
        c += (k % 2 == 1) ? mag : -mag;
    }
    values.push_back(c);

    for (size_t i = 0; i < kTable149.size(); ++i)
        rep.lines.push_back(check_line(kTable149[i], Real::of_rational(values[i], W), W));
    rep.lines.back().note = "+/-1 last-digit (Euler rounding)";

    rep.all_match = std::all_of(rep.lines.begin(), rep.lines.end(),
                                [](const ReplayLine& l) { return l.match; });
    return rep;
}

ReplayReport replay_159(const MathContext& ctx) {
    const long W = std::max(ctx.working_digits(), 40L);
    MathContext work{W, 10};
    ReplayReport rep;
    rep.section = 159;

    Real n = log10_e(work);
    Real x = Real::of_long(1000, W);
    Real lx = to_common(ln(x, work), work);
    Real xlx = x * lx;
    Real half_lx = lx / 2;
    Real half_l2pi = to_common(ln(pi(work) * 2, work), work) / 2;
    Real subtotal = xlx + half_lx + half_l2pi;
    Real nx = n * x;
    Real after = subtotal - nx;
    Real t1 = n * Real::of_rational(fraktur(1) / Rational(2 * 1000), W);
    Real t2 = n * Real::of_rational(fraktur(2) / (Rational(12) * pow_int(Int(1000), 3)), W);
    Real term_sum = t1 - t2;
    Real s = after + term_sum;

    const Real values[] = {lx, xlx, half_lx, half_l2pi, subtotal, nx, after, t1, t2, term_sum, s};
    for (size_t i = 0; i < kTable159.size(); ++i)
        rep.lines.push_back(check_line(kTable159[i], values[i], W));
    rep.all_match = std::all_of(rep.lines.begin(), rep.lines.end(),
                                [](const ReplayLine& l) { return l.match; });
    return rep;
}

ReplayReport replay_162(const MathContext& ctx) {
    const long W = std::max(ctx.working_digits(), 40L);
    MathContext work{W, 10};
    ReplayReport rep;
    rep.section = 162;

    Real k10 = log10_e(work);
    Real t1 = k10 / 400;                      // k/(4m), m = 100
    Real t2 = k10 / 24000000;                 // k/(24 m^3)
    Real term_sum = t1 - t2;
    Real lpi = to_common(ln(pi(work), work), work);
    Real lm2 = to_common(ln(Real::of_long(50, W), work), work);
    Real lm2pi = lpi + lm2;
    Real lsqrt = lm2pi / 2;
    Real lratio = lsqrt + term_sum;
    Real ratio = exp10(lratio, work);

    const Real values[] = {t1, t2, term_sum, lpi, lm2, lm2pi, lsqrt, term_sum, lratio, ratio};
    for (size_t i = 0; i < kTable162.size(); ++i)
        rep.lines.push_back(check_line(kTable162[i], values[i], W));
    rep.all_match = std::all_of(rep.lines.begin(), rep.lines.end(),
                                [](const ReplayLine& l) { return l.match; });
    return rep;
}

} // namespace

std::vector<std::pair<std::string, std::string>> replay_fixture(int section) {
    switch (section) {
        case 149: return kTable149;
        case 159: return kTable159;
        case 162: return kTable162;
        default: throw domain_error("replay: section must be one of 149, 159, 162");
    }
}

ReplayReport replay(int section, const MathContext& ctx) {
    ctx.validate();
    switch (section) {
        case 149: return replay_149(ctx);
        case 159: return replay_159(ctx);
        case 162: return replay_162(ctx);
        default: throw domain_error("replay: section must be one of 149, 159, 162");
    }
}

} // namespace eulersum
