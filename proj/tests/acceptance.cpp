// Acceptance gate: one line per criterion, exit nonzero on any failure.
// Reference values come from independent oracles (Machin pi, direct summation
// with tail bounds, exact big-integer factorials), never from the code paths
// under test.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "eulersum/bernoulli.hpp"
#include "eulersum/em.hpp"
#include "eulersum/logapps.hpp"
#include "eulersum/recip.hpp"
#include "eulersum/replay.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("criterion %2d: %s — %s%s\n", n, ok ? "PASS" : "FAIL", label.c_str(),
                note.c_str());
    if (!ok) ++g_failures;
}

Real tenpow(long e, long digits) { return Real::of_long(10, digits).pow_si(e); }

bool check(bool cond) { return cond; } // readability helper

} // namespace

int main() {
    criterion(1, "all fifteen Bernoulli magnitudes reproduced exactly", [] {
        const std::vector<Rational> table = {
            Rational(1, 6), Rational(1, 30), Rational(1, 42), Rational(1, 30),
            Rational(5, 66), Rational(691, 2730), Rational(7, 6), Rational(3617, 510),
            Rational(43867, 798), Rational(Int(283) * 617, 330),
            rational_from_string("854513/138"), rational_from_string("236364091/2730"),
            Rational(Int(13) * 657931, 6), rational_from_string("23749461029/870"),
            rational_from_string("8615841276005/14322")};
        for (size_t k = 1; k <= 15; ++k)
            if (fraktur(k) != table[k - 1]) return false;
        return true;
    });

    criterion(2, "coefficient recursion: first values and vanishing odd entries", [] {
        bool ok = em_coefficient(1) == Rational(1, 2) && em_coefficient(2) == Rational(1, 12) &&
                  em_coefficient(3) == Rational(0) && em_coefficient(4) == Rational(-1, 720) &&
                  em_coefficient(5) == Rational(0);
        for (unsigned long k = 1; k <= 15 && ok; ++k)
            ok = em_coefficient(2 * k + 1) == Rational(0);
        return ok;
    });

    criterion(3, "sums-of-powers polynomials exact, incl. the -3/20 correction", [] {
        if (power_sum_polynomial(9).coefficients.at(2) != Rational(-3, 20)) return false;
        for (unsigned long c = 1; c <= 10; ++c) {
            PowerSumPolynomial p = power_sum_polynomial(c);
            if (p.coefficient_sum() != Rational(1)) return false;
            Rational brute(0);
            for (long n = 1; n <= 50; ++n) {
                brute += Rational(pow_int(Int(n), c));
                if (eval_power_sum(c, n) != brute) return false;
                if (p.eval(Int(n)) != brute) return false;
            }
        }
        return true;
    });

    criterion(4, "anchor-10 reciprocal-squares table replayed; C within 1e-17 of pi^2/6", [] {
        ReplayReport rep = replay(149, MathContext{19, 10});
        if (rep.lines.size() != 12 || !rep.all_match) return false;
        MathContext ctx{19, 10};
        EMOptions opt;
        opt.epsilon = tenpow(-19, 40);
        EMConstant c = em_constant(SummandFamily::power(-2), 10,
                                   reciprocal_power_prefix(2, 10), ctx, opt);
        Real pi_ref = oracles::machin_pi_real(40);
        return check((c.value.mid - pi_ref * pi_ref / 6).abs() < tenpow(-17, 40));
    });

    criterion(5, "even-zeta rationals 1/6, 1/90, 1/945 inside anchor-10 brackets", [] {
        if (zeta_even_rational(1) != Rational(1, 6) || zeta_even_rational(2) != Rational(1, 90) ||
            zeta_even_rational(3) != Rational(1, 945))
            return false;
        Real pi_ref = oracles::machin_pi_real(40);
        for (unsigned long n = 1; n <= 3; ++n) {
            ZetaResult z = zeta_approx(2 * n, 10, MathContext{18, 10});
            Real exact = Real::of_rational(zeta_even_rational(n), 40) *
                         pi_ref.pow_si(static_cast<long>(2 * n));
            if (!z.value.contains(exact)) return false;
        }
        return true;
    });

    criterion(6, "gamma to 15 places, inside the N=1e7 direct-summation interval", [] {
        GammaConstant g = euler_gamma(MathContext{15, 10}, 10);
        if (!(g.value.width <= tenpow(-15, 30))) return false;
        auto [lo, hi] = oracles::gamma_interval(10000000, 25);
        return check(lo <= g.value.lo && g.value.hi <= hi);
    });

    criterion(7, "H_1000 to 13 places, containing the exact rational", [] {
        BracketedValue h = harmonic_sum(1000, MathContext{18, 10});
        return check(h.width < tenpow(-13, 28) &&
                     h.contains(Real::of_rational(oracles::harmonic_exact(1000), 40)));
    });

    criterion(8, "zeta(3) to 17 places, inside the direct-summation interval", [] {
        ZetaResult z = zeta_approx(3, 10, MathContext{18, 10});
        if (!(z.value.width <= tenpow(-17, 30))) return false;
        auto [lo, hi] = oracles::zeta_interval(3, 1000000, 25);
        return check(lo <= z.value.lo && z.value.hi <= hi);
    });

    criterion(9, "1000 common logs sum to 2567.6046442221328; 1000! starts 4023872", [] {
        LogSumResult r = log_factorial(1000, MathContext{18, 10}, LogBase::common, 2);
        if (!((r.value.mid - Real::of_string("2567.6046442221328", 30)).abs() <
              tenpow(-13, 30) * 2))
            return false;
        FactorialDigits d = factorial_digits(1000, MathContext{18, 10});
        return check(d.digit_count == 2568 && d.digits_certified >= 7 &&
                     d.leading_digits.substr(0, 7) == "4023872");
    });

    criterion(10, "Stirling constant in natural and common logs to printed precision", [] {
        MathContext ctx{25, 10};
        Real c = ln(pi(ctx) * 2, ctx) / 2;
        if (!((c - Real::of_string("0.9189385332046727417803297", 35)).abs() < tenpow(-25, 35)))
            return false;
        Real common = to_common(c, MathContext{24, 10});
        return check((common - Real::of_string("0.399089934179057524782503", 35)).abs() <
                     tenpow(-24, 35));
    });

    criterion(11, "factorial bracketing at x = 10, 50, 100; S(100,27) vs 100! digit overlap", [] {
        MathContext ctx{18, 10};
        BracketReport r10 = factorial_bracket_search(10, ctx);
        if (r10.m_low != 2 || !r10.unique_value || *r10.unique_value != 3628800) return false;
        BracketReport r50 = factorial_bracket_search(50, ctx);
        if (r50.m_low != 26 || !r50.unique_value || *r50.unique_value != factorial_int(50))
            return false;
        if (factorial_int(50).get_str() !=
            "30414093201713378043612608166064768844377641568960512000000000000")
            return false;
        BracketReport r100 = factorial_bracket_search(100, ctx);
        if (r100.m_low != 74 || !r100.unique_value || *r100.unique_value != factorial_int(100))
            return false;
        // S(100,27) reproduces exactly the first 82 digits of 100!.
        std::string exact = factorial_int(100).get_str();
        std::string approx = stirling_value(100, 27, ctx).to_fixed(0);
        size_t agree = 0;
        while (agree < exact.size() && agree < approx.size() && exact[agree] == approx[agree])
            ++agree;
        return check(agree == 82);
    });

    criterion(12, "central binomial: log ratio, ratio 12.56451, exact oracle in bracket", [] {
        CentralBinomialResult r = central_binomial_log_ratio(100, MathContext{18, 10});
        if (!((r.log_ratio.mid - Real::of_string("1.0991456565", 30)).abs() <
              tenpow(-10, 30) * 2))
            return false;
        if (!((r.ratio.mid - Real::of_string("12.56451", 30)).abs() < tenpow(-6, 30) * 5))
            return false;
        Rational exact = Rational(pow_int(Int(2), 100)) / Rational(binomial_int(100, 50));
        return check(r.ratio.contains(Real::of_rational(exact, 40)));
    });

    criterion(13, "bracketing/alternation/smallest-term/Wallis property suite", [] {
        // 80-digit work: anchor 20 reaches bracket widths near 1e-55.
        MathContext ctx{70, 10};
        Real pi_ref = oracles::machin_pi_real(80);
        Real target = pi_ref * pi_ref / 6;
        SummandFamily fam = SummandFamily::power(-2);
        // containment at every valid cut depth, anchors 5/10/20
        for (unsigned long anchor : {5UL, 10UL, 20UL}) {
            Real xr = Real::of_long(static_cast<long>(anchor), 80);
            Real partial = Real::of_rational(reciprocal_power_prefix(2, anchor), 80) -
                           fam.antiderivative(xr, ctx) - fam.value(xr, ctx) / 2;
            Real prev_mag(80);
            for (unsigned long k = 1; k <= default_budget(anchor); ++k) {
                Real t = em_term(fam, k, xr, ctx);
                if (k > 1 && t.abs() >= prev_mag) break;
                Real next = partial - t;
                if (!make_bracket(partial, next).contains(target)) return false;
                partial = next;
                prev_mag = t.abs();
            }
        }
        // sign alternation + smallest-term location near pi*x
        for (long x : {10L, 20L}) {
            for (SummandFamily f : {SummandFamily::power(-2), SummandFamily::log()}) {
                Real xr = Real::of_long(x, 40);
                size_t argmin = 0;
                std::vector<Real> terms;
                for (unsigned long k = 1; k <= default_budget(x); ++k) {
                    terms.push_back(em_term(f, k, xr, ctx));
                    if (terms.size() > 1 &&
                        terms.back().sign() == terms[terms.size() - 2].sign())
                        return false;
                    if (terms.back().abs() < terms[argmin].abs()) argmin = terms.size() - 1;
                }
                long k_min = static_cast<long>(argmin) + 1;
                if (std::abs(k_min - static_cast<long>(3.14159265 * x + 0.5)) > 3) return false;
            }
        }
        // Wallis series brackets (1/2) ln 2 pi
        std::vector<Real> wallis = {Real::of_long(1, 30)};
        for (unsigned long k = 1; k <= 10; ++k) {
            Rational mag = fraktur(k) / Rational(static_cast<long>((2 * k - 1) * 2 * k));
            wallis.push_back(Real::of_rational((k % 2 == 1) ? -mag : mag, 30));
        }
        BracketedValue b = truncate_smallest(wallis, Real(30)).bracket();
        return check(b.contains(ln(pi(ctx) * 2, ctx) / 2));
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 13 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
