#include <doctest.h>

#include "eulersum/errors.hpp"
#include "eulersum/recip.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

Real tenpow(long e, long digits) { return Real::of_long(10, digits).pow_si(e); }

} // namespace

TEST_CASE("zeta(2) at anchor 10") {
    ZetaResult z = zeta_approx(2, 10, MathContext{20, 10});
    Real pi_ref = oracles::machin_pi_real(40);
    CHECK(z.value.contains(pi_ref * pi_ref / 6));
    CHECK((z.value.mid - Real::of_string("1.6449340668482264365", 40)).abs() < tenpow(-19, 40));
    CHECK((z.value.mid - Real::of_string("1.644934066848226430", 40)).abs() < tenpow(-17, 40));
    REQUIRE(z.exact_form.has_value());
    CHECK(z.exact_form->first == Rational(1, 6));
    CHECK(z.exact_form->second == 2);
}

TEST_CASE("even zeta exact forms sit inside the computed brackets") {
    Real pi_ref = oracles::machin_pi_real(40);
    for (unsigned long s : {2UL, 4UL, 6UL}) {
        ZetaResult z = zeta_approx(s, 10, MathContext{18, 10});
        REQUIRE(z.exact_form.has_value());
        Real exact = Real::of_rational(z.exact_form->first, 40) *
                     pi_ref.pow_si(static_cast<long>(s));
        CHECK(z.value.contains(exact));
    }
}

TEST_CASE("zeta(3) against the direct-summation oracle") {
    ZetaResult z = zeta_approx(3, 10, MathContext{18, 10});
    CHECK((z.value.mid - Real::of_string("1.20205690315959429", 40)).abs() < tenpow(-17, 40));
    auto [lo, hi] = oracles::zeta_interval(3, 100000, 25);
    CHECK(lo <= z.value.lo);
    CHECK(z.value.hi <= hi);
    CHECK(!z.exact_form.has_value()); // no rational-pi pattern is claimed for odd s
}

TEST_CASE("zeta domain errors") {
    MathContext ctx{18, 10};
    CHECK_THROWS_AS(zeta_approx(1, 10, ctx), domain_error);
    CHECK_THROWS_AS(zeta_approx(0, 10, ctx), domain_error);
    CHECK_THROWS_AS(zeta_approx(2, 1, ctx), domain_error);
}

TEST_CASE("monotone refinement: larger anchors give tighter smallest-term brackets") {
    MathContext ctx{18, 10};
    EMOptions exhaustive;
    exhaustive.epsilon = Real(30); // zero: pure smallest-term stopping
    ZetaResult a10 = zeta_approx(2, 10, ctx, exhaustive);
    ZetaResult a20 = zeta_approx(2, 20, ctx, exhaustive);
    CHECK(a10.reason == StopReason::smallest_term);
    CHECK(a20.reason == StopReason::smallest_term);
    CHECK(a20.value.width < a10.value.width);
}

TEST_CASE("harmonic sums") {
    MathContext ctx{18, 10};
    SUBCASE("small n is exact") {
        BracketedValue h1 = harmonic_sum(1, ctx);
        CHECK(h1.width.is_zero());
        CHECK((h1.mid - Real::of_long(1, 28)).is_zero());
        BracketedValue h10 = harmonic_sum(10, ctx);
        CHECK(h10.width.is_zero());
        CHECK((h10.mid - Real::of_rational(Rational(7381, 2520), 28)).is_zero());
    }
    SUBCASE("n = 1000 brackets the exact rational to 13 places") {
        BracketedValue h = harmonic_sum(1000, ctx);
        CHECK(h.width < tenpow(-13, 28));
        CHECK(h.contains(Real::of_rational(oracles::harmonic_exact(1000), 40)));
    }
    SUBCASE("errors") { CHECK_THROWS_AS(harmonic_sum(0, ctx), domain_error); }
}

TEST_CASE("exact and summation-formula harmonic paths agree") {
    MathContext ctx{18, 10};
    GammaConstant g = euler_gamma(ctx, 10);
    EMConstant c{SummandFamily::power(-1), g.value, "anchor x0=10", std::nullopt,
                 g.terms_used, g.reason};
    for (unsigned long n : {10UL, 100UL, 1000UL}) {
        TailResult t = em_tail(SummandFamily::power(-1),
                               Real::of_long(static_cast<long>(n), 28), c, ctx);
        CHECK(t.value.contains(Real::of_rational(oracles::harmonic_exact(n), 40)));
    }
}

TEST_CASE("euler_gamma") {
    SUBCASE("15 digits, anchor 10: inside the N=1e5 reference interval") {
        GammaConstant g = euler_gamma(MathContext{15, 10}, 10);
        CHECK(g.value.width <= tenpow(-15, 30));
        CHECK(g.value.mid > Real::of_rational(Rational(1, 2), 30));
        CHECK(g.value.mid < Real::of_rational(Rational(3, 5), 30));
        auto [lo, hi] = oracles::gamma_interval(100000, 25);
        CHECK(lo <= g.value.lo);
        CHECK(g.value.hi <= hi);
    }
    SUBCASE("5 digits") {
        GammaConstant g = euler_gamma(MathContext{5, 10}, 10);
        CHECK(g.value.mid.to_string(5) == "0.57722");
    }
    SUBCASE("anchors 10 and 100 agree") {
        GammaConstant a = euler_gamma(MathContext{18, 10}, 10);
        GammaConstant b = euler_gamma(MathContext{18, 10}, 100);
        CHECK(a.value.intersects(b.value));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(euler_gamma(MathContext{0, 10}, 10), domain_error);
        CHECK_THROWS_AS(euler_gamma(MathContext{18, 10}, 1), domain_error);
    }
}

TEST_CASE("reciprocal_power_prefix") {
    CHECK(reciprocal_power_prefix(1, 10) == Rational(7381, 2520));
    Rational s2(0);
    for (long i = 1; i <= 10; ++i) s2 += Rational(1, i * i);
    CHECK(reciprocal_power_prefix(2, 10) == s2);
}
