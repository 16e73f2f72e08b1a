#include "xtropy/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "xtropy/quadrature.hpp"
#include "xtropy/rss.hpp"

namespace xtropy {

ClosedFormReport power_rss_closed(double theta, double m, int n) {
    if (!(theta > 0.0) || m < 0.0)
        throw InvalidParameter("power closed form needs theta > 0 and m >= 0");
    if (n < 1) throw InvalidParameter("power closed form needs n >= 1");

    const RssCoefficients coef = rss_coefficients(n);
    // Denominator gamma argument carries the 1/theta correction; the
    // uncorrected form fails the n=1 integral -theta^2/(2(m+2 theta-1)).
    const double denom_arg = (m + (2.0 * n + 1.0) * theta - 1.0) / theta;
    double log_abs = coef.log_q_n - std::log(2.0) + n * std::log(theta);
    for (int i = 1; i <= n; ++i) {
        const double q = (m + 2.0 * i * theta - 1.0) / theta;
        if (q <= 0.0)
            throw DivergenceError("power RSS extropy diverges: factor i=" + std::to_string(i) +
                                      " has gamma argument " + std::to_string(q),
                                  0.0, 0.0, i);
        log_abs += log_factorial(2 * n - 1) - log_factorial(2 * i - 2);
        log_abs += std::lgamma(q) - std::lgamma(denom_arg);
    }
    return ClosedFormReport{-std::exp(log_abs), FormulaId::power, true};
}

double exp_orderstat_moment(int i, int n, double m) {
    if (n < 1 || i < 1 || i > n) throw InvalidParameter("order statistic indices need 1 <= i <= n");
    if (m < 0.0) throw InvalidParameter("moment order must be nonnegative");
    const double lc =
        log_factorial(2 * n) - log_factorial(2 * i - 2) - log_factorial(2 * n - 2 * i + 1);
    auto integrand = [=](double x) {
        double lt = lc - (2.0 * n - 2.0 * i + 2.0) * x;
        if (i > 1) lt += (2.0 * i - 2.0) * std::log(-std::expm1(-x));
        const double density = std::exp(lt);
        return m == 0.0 ? density : std::pow(x, m) * density;
    };
    const double value =
        integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-12).value;
    if (m == 1.0) {
        const double harmonic = exp_orderstat_mean_harmonic(2 * i - 1, 2 * n);
        if (std::abs(value - harmonic) > 1e-8)
            throw TheoremViolation("exponential order-statistic mean disagrees with the "
                                   "harmonic sum: " +
                                   std::to_string(value) + " vs " + std::to_string(harmonic));
    }
    return value;
}

double exp_orderstat_mean_harmonic(int k, int N) {
    if (k < 1 || k > N) throw InvalidParameter("order statistic indices need 1 <= k <= N");
    double sum = 0.0;
    for (int j = N - k + 1; j <= N; ++j) sum += 1.0 / j;
    return sum;
}

ClosedFormReport exponential_rss_closed(double lambda, int m, int n) {
    if (!(lambda > 0.0)) throw InvalidParameter("exponential closed form needs lambda > 0");
    if (m < 0) throw InvalidParameter("exponential closed form needs integer m >= 0");
    if (n < 1) throw InvalidParameter("exponential closed form needs n >= 1");

    const RssCoefficients coef = rss_coefficients(n);
    double log_abs = coef.log_q_n + log_double_factorial_odd(n) - (n + 1.0) * std::log(2.0) -
                     n * std::log(static_cast<double>(n)) -
                     n * (m - 1.0) * std::log(lambda);
    for (int i = 1; i <= n; ++i) log_abs += std::log(exp_orderstat_moment(i, n, m));
    return ClosedFormReport{-std::exp(log_abs), FormulaId::exponential, false};
}

ClosedFormReport pareto_rss_closed(double alpha, double m, int n) {
    if (!(alpha > 0.0) || m < 0.0)
        throw InvalidParameter("pareto closed form needs alpha > 0 and m >= 0");
    if (n < 1) throw InvalidParameter("pareto closed form needs n >= 1");

    const RssCoefficients coef = rss_coefficients(n);
    const double denom_arg = (alpha + 2.0 * n * alpha - m + 1.0) / alpha;
    double log_abs = coef.log_q_n - std::log(2.0) + n * std::log(alpha);
    for (int i = 1; i <= n; ++i) {
        const double q = (2.0 * n * alpha - 2.0 * i * alpha + 2.0 * alpha - m + 1.0) / alpha;
        if (q <= 0.0)
            throw DivergenceError("pareto RSS extropy diverges: factor i=" + std::to_string(i) +
                                      " has gamma argument " + std::to_string(q),
                                  0.0, 0.0, i);
        log_abs += log_factorial(2 * n - 1) - log_factorial(2 * n - 2 * i);
        log_abs += std::lgamma(q) - std::lgamma(denom_arg);
    }
    return ClosedFormReport{-std::exp(log_abs), FormulaId::pareto, false};
}

std::pair<double, double> linear_pair_values(double m) {
    if (m < 0.0) throw InvalidParameter("linear pair values need m >= 0");
    const double jx = -2.0 / (m + 3.0);
    const double jy = -2.0 * (1.0 / (m + 1.0) - 2.0 / (m + 2.0) + 1.0 / (m + 3.0));
    return {jx, jy};
}

}  // namespace xtropy
