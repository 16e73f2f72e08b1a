#include "xtropy/rss.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace xtropy {

namespace {

// Prime-factored nonnegative-exponent arithmetic keeps c_{i,n} and Q_n
// exact: the exponent of p in k! is sum_j floor(k/p^j) (Legendre).
std::vector<int> primes_up_to(int limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<int> primes;
    for (int p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (long q = static_cast<long>(p) * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

long factorial_exponent(long k, int p) {
    long e = 0;
    for (long q = p; q <= k; q *= p) {
        e += k / q;
        if (q > k / p) break;  // avoid overflow of q *= p
    }
    return e;
}

struct Factored {
    const std::vector<int>* primes;
    std::vector<long> exps;

    explicit Factored(const std::vector<int>& ps) : primes(&ps), exps(ps.size(), 0) {}

    void add_factorial(long k, int sign) {
        for (size_t j = 0; j < primes->size(); ++j)
            exps[j] += sign * factorial_exponent(k, (*primes)[j]);
    }
    void add_choose(long n, long k, int sign) {
        add_factorial(n, sign);
        add_factorial(k, -sign);
        add_factorial(n - k, -sign);
    }
    void add_integer_power(long base, long power) {
        for (size_t j = 0; j < primes->size(); ++j) {
            const int p = (*primes)[j];
            long e = 0;
            long b = base;
            while (b % p == 0) {
                ++e;
                b /= p;
            }
            exps[j] += e * power;
        }
    }
    void add(const Factored& o) {
        for (size_t j = 0; j < exps.size(); ++j) exps[j] += o.exps[j];
    }

    double log_value() const {
        long double s = 0.0L;
        for (size_t j = 0; j < exps.size(); ++j)
            s += static_cast<long double>(exps[j]) * std::log(static_cast<long double>((*primes)[j]));
        return static_cast<double>(s);
    }

    // Reduced fraction when numerator and denominator fit in 64 bits.
    Rational to_rational() const {
        unsigned __int128 num = 1, den = 1;
        const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
        for (size_t j = 0; j < exps.size(); ++j) {
            const int p = (*primes)[j];
            for (long e = 0; e < std::abs(exps[j]); ++e) {
                (exps[j] > 0 ? num : den) *= p;
                if (num > cap || den > cap) return Rational{};
            }
        }
        if (num > static_cast<unsigned __int128>(INT64_MAX) ||
            den > static_cast<unsigned __int128>(INT64_MAX))
            return Rational{};
        return Rational{static_cast<long long>(num), static_cast<long long>(den), true};
    }

    double to_double() const {
        unsigned __int128 num = 1, den = 1;
        const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 126;
        bool fits = true;
        for (size_t j = 0; j < exps.size() && fits; ++j) {
            const int p = (*primes)[j];
            for (long e = 0; e < std::abs(exps[j]); ++e) {
                (exps[j] > 0 ? num : den) *= p;
                if (num > cap || den > cap) {
                    fits = false;
                    break;
                }
            }
        }
        if (fits)
            return static_cast<double>(static_cast<long double>(num) /
                                       static_cast<long double>(den));
        return std::exp(log_value());
    }
};

constexpr int kExactLimit = 64;

}  // namespace

RssCoefficients rss_coefficients(int n) {
    if (n < 1) throw InvalidParameter("rss coefficients require n >= 1");

    RssCoefficients out;
    out.n = n;
    out.c.resize(n);
    out.c_exact.resize(n);

    if (n <= kExactLimit) {
        static thread_local std::vector<int> primes;
        const int need = std::max(2, 2 * n - 1);
        if (primes.empty() || primes.back() < need) primes = primes_up_to(need);

        Factored q(primes);
        q.add_integer_power(n, n);
        for (int i = 1; i <= n; ++i) {
            Factored ci(primes);
            ci.add_choose(2 * i - 2, i - 1, +1);
            ci.add_choose(2 * (n - i), n - i, +1);
            ci.add_choose(2 * n - 1, n - 1, -1);
            out.c[i - 1] = ci.to_double();
            out.c_exact[i - 1] = ci.to_rational();
            q.add(ci);
        }
        out.q_n = q.to_double();
        out.log_q_n = q.log_value();
        out.q_exact = q.to_rational();
        return out;
    }

    double log_q = n * std::log(static_cast<double>(n));
    for (int i = 1; i <= n; ++i) {
        const double lc = log_choose(2 * i - 2, i - 1) + log_choose(2 * (n - i), n - i) -
                          log_choose(2 * n - 1, n - 1);
        out.c[i - 1] = std::exp(lc);
        log_q += lc;
    }
    out.q_n = std::exp(log_q);
    out.log_q_n = log_q;
    return out;
}

ExtropyValue srs_extropy(const DistPtr& dist, const WeightFunction& w, int n, double tol) {
    if (n < 1) throw InvalidParameter("srs extropy requires n >= 1");
    const ExtropyValue single = general_weighted_extropy(dist, w, tol);
    const double mean_lambda = -2.0 * single.value;  // E(Lambda(U))
    const double value = -0.5 * std::pow(mean_lambda, n);
    const double err =
        n * std::pow(std::abs(mean_lambda), n - 1) * single.error_estimate + tol;
    return ExtropyValue{value, err, Method::quadrature, ""};
}

ExtropyValue rss_extropy(const DistPtr& dist, const WeightFunction& w, int n, double tol) {
    if (n < 1) throw InvalidParameter("rss extropy requires n >= 1");

    const RssCoefficients coef = rss_coefficients(n);
    LambdaProfile lambda(dist, w);

    std::vector<double> factor(n), factor_err(n);
    for (int i = 1; i <= n; ++i) {
        try {
            QuadratureResult q = beta_expectation([&lambda](double u) { return lambda(u); },
                                                  BetaOrderKernel::rss_factor(i, n), tol);
            factor[i - 1] = q.value;
            factor_err[i - 1] = q.abs_error_estimate;
        } catch (const DivergenceError&) {
            throw DivergenceError("RSS extropy factor i=" + std::to_string(i) +
                                      " diverges for " + dist->spec() + ", weight " + w.spec(),
                                  0.0, 0.0, i);
        }
    }

    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= factor[i];
    double err_prod = 0.0;
    for (int i = 0; i < n; ++i) {
        double rest = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) rest *= std::abs(factor[j]);
        err_prod += factor_err[i] * rest;
    }
    ExtropyValue result{-0.5 * coef.q_n * prod, 0.5 * coef.q_n * err_prod,
                        Method::quadrature, ""};

    // Independent route: the direct x-space product of per-order-statistic
    // integrals -1/2 prod (-2 J^w(X_{(i:n)i})).
    try {
        const ExtropyValue direct = rss_extropy_direct(dist, w, n, tol);
        const double allowance = 10.0 * tol * std::max(1.0, std::abs(result.value)) +
                                 result.error_estimate + direct.error_estimate;
        if (std::abs(direct.value - result.value) > allowance)
            throw TheoremViolation("RSS product formula disagrees with the direct "
                                   "order-statistic product: " +
                                   std::to_string(result.value) + " vs " +
                                   std::to_string(direct.value));
    } catch (const ConvergenceError&) {
        result.note = "direct-product cross-check did not converge; product formula value used";
    }

    return result;
}

ExtropyValue rss_extropy_direct(const DistPtr& dist, const WeightFunction& w, int n,
                                double tol) {
    if (n < 1) throw InvalidParameter("rss extropy requires n >= 1");
    const Support s = dist->support();
    std::vector<double> factor(n), factor_err(n);
    for (int i = 1; i <= n; ++i) {
        const double lc = log_factorial(n) - log_factorial(i - 1) - log_factorial(n - i);
        auto integrand = [&](double x) {
            const double f = dist->pdf(x);
            if (f == 0.0) return 0.0;
            const double F = dist->cdf(x);
            double v = std::exp(2.0 * lc) * f * f * w(x);
            if (i > 1) v *= std::pow(F, 2 * (i - 1));
            if (i < n) v *= std::pow(1.0 - F, 2 * (n - i));
            return v;
        };
        try {
            QuadratureResult q = integrate(integrand, s.lower, s.upper, tol);
            factor[i - 1] = q.value;  // -2 J^w(X_{(i:n)i})
            factor_err[i - 1] = q.abs_error_estimate;
        } catch (const DivergenceError&) {
            throw DivergenceError("direct RSS factor i=" + std::to_string(i) +
                                      " diverges for " + dist->spec() + ", weight " + w.spec(),
                                  0.0, 0.0, i);
        }
    }
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= factor[i];
    double err_prod = 0.0;
    for (int i = 0; i < n; ++i) {
        double rest = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) rest *= std::abs(factor[j]);
        err_prod += factor_err[i] * rest;
    }
    return ExtropyValue{-0.5 * prod, 0.5 * err_prod, Method::quadrature, ""};
}

double rss_srs_ratio_bound(int n) {
    if (n < 2) throw InvalidParameter("the RSS/SRS bound requires n >= 2");
    double log_bound = 2.0 * n * std::log(static_cast<double>(n)) -
                       2.0 * (n - 1.0) * (n - 2.0) * std::log(static_cast<double>(n - 1));
    for (int i = 2; i <= n - 1; ++i) {
        log_bound += 2.0 * log_choose(n - 1, i - 1);
        log_bound += (2.0 * i - 2.0) * std::log(static_cast<double>(i - 1));
        log_bound += (2.0 * n - 2.0 * i) * std::log(static_cast<double>(n - i));
    }
    return std::exp(log_bound);
}

}  // namespace xtropy
