#include <doctest.h>

#include <cmath>

#include "xtropy/quadrature.hpp"

using namespace xtropy;

TEST_CASE("polynomial and exponential integrals") {
    CHECK(integrate([](double u) { return u; }, 0.0, 1.0).value == doctest::Approx(0.5).epsilon(1e-12));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, inf).value ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("logarithmic endpoint integrand") {
    // antiderivative t^4 (4 ln t - 1)/16 gives -1/16
    const QuadratureResult r =
        integrate([](double t) { return t * t * t * std::log(t); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(-1.0 / 16.0).epsilon(1e-10));
    CHECK(r.abs_error_estimate <= 1e-10);
}

TEST_CASE("error estimate is honest on a hard but integrable kernel") {
    const QuadratureResult r = integrate([](double u) { return std::log(u); }, 0.0, 1.0);
    CHECK(std::abs(r.value - (-1.0)) <= 1e-9);
    const QuadratureResult s =
        integrate([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0, 1e-8);
    CHECK(std::abs(s.value - 2.0) <= 1e-7);
}

TEST_CASE("divergent integrands raise DivergenceError") {
    CHECK_THROWS_AS(integrate([](double u) { return 1.0 / u; }, 0.0, 1.0), DivergenceError);
    CHECK_THROWS_AS(integrate([](double u) { return 1.0 / (1.0 - u); }, 0.0, 1.0),
                    DivergenceError);
    const double inf = std::numeric_limits<double>::infinity();
    // log-divergent tail
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 1.0, inf), DivergenceError);
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 1.0, 0.0), InvalidParameter);
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 0.0, 1.0, -1.0), InvalidParameter);
    CHECK_THROWS_AS(BetaOrderKernel(0, 1), InvalidParameter);
}

TEST_CASE("beta kernel pdf values") {
    CHECK(beta_kernel_pdf(BetaOrderKernel(1, 1), 0.7) == doctest::Approx(1.0));
    CHECK(beta_kernel_pdf(BetaOrderKernel(3, 1), 0.5) == doctest::Approx(0.75));
    // limit 3(1-u)^2 at u -> 0
    CHECK(beta_kernel_pdf(BetaOrderKernel(1, 3), 1e-14) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("beta expectations") {
    CHECK(beta_expectation([](double u) { return u; }, BetaOrderKernel(1, 3)).value ==
          doctest::Approx(0.25).epsilon(1e-10));
    CHECK(beta_expectation([](double) { return 1.0; }, BetaOrderKernel(4, 9)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    // reduces to 3 \int t^3 (-ln t) dt = 3/16
    CHECK(beta_expectation([](double u) { return -(1.0 - u) * std::log1p(-u); },
                           BetaOrderKernel(1, 3))
              .value == doctest::Approx(3.0 / 16.0).epsilon(1e-10));
}

TEST_CASE("normalization across the RSS kernel family up to n = 30") {
    for (int n = 1; n <= 30; n += 4)
        for (int i = 1; i <= n; i += std::max(1, n / 3)) {
            const QuadratureResult r =
                beta_expectation([](double) { return 1.0; }, BetaOrderKernel::rss_factor(i, n));
            CHECK(std::abs(r.value - 1.0) < 1e-12);
        }
}

TEST_CASE("linearity of beta expectations") {
    const BetaOrderKernel k(3, 4);
    auto g = [](double u) { return std::sin(3.0 * u); };
    auto h = [](double u) { return u * u; };
    const double tol = 1e-10;
    const double lhs =
        beta_expectation([&](double u) { return 2.0 * g(u) - 0.5 * h(u); }, k, tol).value;
    const double rhs =
        2.0 * beta_expectation(g, k, tol).value - 0.5 * beta_expectation(h, k, tol).value;
    CHECK(std::abs(lhs - rhs) <= 2.0 * tol);
}

TEST_CASE("transform consistency between half-line and unit-interval routes") {
    const double inf = std::numeric_limits<double>::infinity();
    const double tol = 1e-10;
    const double direct =
        integrate([](double x) { return x * std::exp(-x); }, 0.0, inf, tol).value;
    // substitute u = 1 - e^{-x}
    const double substituted =
        integrate([](double u) { return -std::log1p(-u); }, 0.0, 1.0, tol).value;
    CHECK(std::abs(direct - substituted) <= 2.0 * tol);
}

TEST_CASE("log-space combinatorics") {
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)));
    CHECK(log_choose(5, 2) == doctest::Approx(std::log(10.0)));
    CHECK(log_choose(0, 0) == doctest::Approx(0.0));
    CHECK(log_double_factorial_odd(1) == doctest::Approx(0.0));
    CHECK(log_double_factorial_odd(2) == doctest::Approx(std::log(3.0)));
    CHECK(log_double_factorial_odd(3) == doctest::Approx(std::log(15.0)));
}
