#include "eulersum/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

// Shared coefficient cache; extension is serialized so all callers observe
// identical values. Preloaded through order 60 on first touch.
class CoefficientCache {
public:
    Rational get(unsigned long n) {
        std::lock_guard<std::mutex> lock(mu_);
        extend(std::max<unsigned long>(n, 60));
        return coeffs_[n];
    }

private:
    void extend(unsigned long n) {
        if (coeffs_.empty()) {
            coeffs_.push_back(Rational(0)); // unused slot 0
            factorials_.push_back(Int(1));
        }
        while (factorials_.size() <= n + 1)
            factorials_.push_back(factorials_.back() * Int(factorials_.size()));
        for (unsigned long m = coeffs_.size(); m <= n; ++m) {
            Rational a(0);
            for (unsigned long i = 1; i < m; ++i) {
                Rational term = coeffs_[m - i] / Rational(factorials_[i + 1]);
                a += (i % 2 == 1) ? term : -term;
            }
            Rational last = Rational(1) / Rational(factorials_[m + 1]);
            a += (m % 2 == 1) ? last : -last;
            coeffs_.push_back(a);
        }
    }

    std::mutex mu_;
    std::vector<Rational> coeffs_;
    std::vector<Int> factorials_;
};

CoefficientCache& cache() {
    static CoefficientCache c;
    return c;
}

} // namespace

Rational em_coefficient(unsigned long n) {
    if (n == 0) throw domain_error("em_coefficient: n must be >= 1");
    return cache().get(n);
}

Rational bernoulli_number(unsigned long order) {
    if (order == 0 || order % 2 != 0)
        throw domain_error("bernoulli_number: order must be even and >= 2");
    return em_coefficient(order) * Rational(factorial_int(order));
}

Rational fraktur(unsigned long k) {
    if (k == 0) throw domain_error("fraktur: k must be >= 1");
    Rational b = bernoulli_number(2 * k);
    return b < 0 ? -b : b;
}

Rational PowerSumPolynomial::eval(const Int& n) const {
    Rational s(0);
    for (const auto& [j, c] : coefficients) s += c * Rational(pow_int(n, j));
    return s;
}

Rational PowerSumPolynomial::coefficient_sum() const {
    Rational s(0);
    for (const auto& [j, c] : coefficients) s += c;
    return s;
}

PowerSumPolynomial power_sum_polynomial(unsigned long c) {
    if (c == 0) throw domain_error("power_sum_polynomial: c must be >= 1");
    PowerSumPolynomial p;
    p.exponent = c;
    // sum_{i<=n} i^c = n^(c+1)/(c+1) + n^c/2
    //                + sum_{2k<=c} C(c+1, 2k) B_{2k} n^(c+1-2k) / (c+1)
    p.coefficients[c + 1] = Rational(1) / Rational(static_cast<long>(c + 1));
    p.coefficients[c] = Rational(1, 2);
    for (unsigned long k = 1; 2 * k <= c; ++k) {
        Rational coeff = Rational(binomial_int(c + 1, 2 * k)) * bernoulli_number(2 * k) /
                         Rational(static_cast<long>(c + 1));
        if (coeff != 0) p.coefficients[c + 1 - 2 * k] = coeff;
    }
    return p;
}

Rational eval_power_sum(unsigned long c, const Int& n) {
    if (n < 0) throw domain_error("eval_power_sum: n must be non-negative");
    return power_sum_polynomial(c).eval(n);
}

Rational zeta_even_rational(unsigned long n) {
    if (n == 0) throw domain_error("zeta_even_rational: n must be >= 1");
    Rational q = bernoulli_number(2 * n) * Rational(pow_int(Int(2), 2 * n - 1)) /
                 Rational(factorial_int(2 * n));
    if (n % 2 == 0) q = -q;
    return q;
}

} // namespace eulersum
