#include "eulersum/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

mpfr_prec_t bits_for_digits(long digits) {
    // log2(10) = 3.3219...; a fixed 16-bit margin absorbs intermediate rounding.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

long require_digits(long digits) {
    if (digits < 1) throw domain_error("precision must be at least 1 digit");
    return digits;
}

} // namespace

void MathContext::validate() const {
    if (target_digits < 1) throw domain_error("MathContext: target_digits must be positive");
    if (guard_digits < 0) throw domain_error("MathContext: guard_digits must be non-negative");
}

Real::Real() : digits_(18) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_zero(v_, 1);
}

Real::Real(long digits) : digits_(require_digits(digits)) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of_long(long v, long digits) {
    Real r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of_int(const Int& v, long digits) {
    Real r(digits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of_rational(const Rational& q, long digits) {
    Real r(digits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::of_string(const std::string& s, long digits) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', '.');
    Real r(digits);
    if (mpfr_set_str(r.v_, t.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("Real::of_string: cannot parse '" + s + "'");
    return r;
}

Real Real::at_digits(long digits) const {
    Real r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

int Real::sign() const { return mpfr_sgn(v_); }

bool Real::is_integer() const { return mpfr_integer_p(v_) != 0; }

Real Real::abs() const {
    Real r(digits_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define EULERSUM_REAL_BINOP(op, fn)                          \
    Real Real::operator op(const Real& o) const {            \
        Real r(std::max(digits_, o.digits_));                \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                       \
        return r;                                            \
    }
EULERSUM_REAL_BINOP(+, mpfr_add)
EULERSUM_REAL_BINOP(-, mpfr_sub)
EULERSUM_REAL_BINOP(*, mpfr_mul)
EULERSUM_REAL_BINOP(/, mpfr_div)
#undef EULERSUM_REAL_BINOP

#define EULERSUM_REAL_BINOP_SI(op, fn)         \
    Real Real::operator op(long o) const {     \
        Real r(digits_);                       \
        fn(r.v_, v_, o, MPFR_RNDN);            \
        return r;                              \
    }
EULERSUM_REAL_BINOP_SI(+, mpfr_add_si)
EULERSUM_REAL_BINOP_SI(-, mpfr_sub_si)
EULERSUM_REAL_BINOP_SI(*, mpfr_mul_si)
EULERSUM_REAL_BINOP_SI(/, mpfr_div_si)
#undef EULERSUM_REAL_BINOP_SI

bool Real::operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
bool Real::operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
bool Real::operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
bool Real::operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
bool Real::operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }
bool Real::operator!=(const Real& o) const { return mpfr_cmp(v_, o.v_) != 0; }

Real Real::pow_si(long e) const {
    Real r(digits_);
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

Int Real::floor_int() const {
    Int z;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_floor(t, v_);
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

Int Real::ceil_int() const {
    Int z;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_ceil(t, v_);
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::string Real::to_string(long sig_digits, bool euler_style) const {
    if (sig_digits < 1) throw domain_error("to_string: need at least 1 digit");
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return "nan";

    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits.erase(0, 1);
    }
    // value = 0.digits * 10^e10
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out;
    const long e = static_cast<long>(e10);
    if (e > 0 && e <= sig_digits + 6) {
        if (static_cast<long>(digits.size()) <= e) {
            out = digits + std::string(e - digits.size(), '0');
        } else {
            out = digits.substr(0, e) + "." + digits.substr(e);
        }
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(-e, '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    if (neg) out.insert(0, "-");
    if (euler_style) std::replace(out.begin(), out.end(), '.', ',');
    return out;
}

std::string Real::to_fixed(long decimals, bool euler_style) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*f", static_cast<int>(decimals), MPFR_RNDN, v_);
    std::string out(s);
    mpfr_free_str(s);
    if (euler_style) std::replace(out.begin(), out.end(), '.', ',');
    return out;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

Real pi(const MathContext& ctx) {
    ctx.validate();
    Real r(ctx.working_digits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r.at_digits(ctx.target_digits);
}

Real ln(const Real& x, const MathContext& ctx) {
    ctx.validate();
    if (x.sign() <= 0) throw domain_error("ln: argument must be positive");
    Real r(ctx.working_digits());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x, const MathContext& ctx) {
    ctx.validate();
    Real r(ctx.working_digits());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x, const MathContext& ctx) {
    ctx.validate();
    if (x.sign() < 0) throw domain_error("sqrt: argument must be non-negative");
    Real r(ctx.working_digits());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp10(const Real& x, const MathContext& ctx) {
    ctx.validate();
    Real r(ctx.working_digits());
    mpfr_exp10(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log10_e(const MathContext& ctx) {
    ctx.validate();
    Real ten = Real::of_long(10, ctx.working_digits());
    Real r(ctx.working_digits());
    mpfr_log(r.raw(), ten.raw(), MPFR_RNDN);
    mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

Real to_common(const Real& x, const MathContext& ctx) {
    return x * log10_e(ctx);
}

Real ulp_decimal(const Real& x, long digits) {
    if (x.is_zero()) return Real(digits);
    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, 2, x.raw(), MPFR_RNDN);
    mpfr_free_str(raw);
    Real r(digits);
    // |x| in [10^(e10-1), 10^e10); one ulp at `digits` significant digits
    mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), static_cast<long>(e10) - digits, MPFR_RNDN);
    return r;
}

} // namespace eulersum
