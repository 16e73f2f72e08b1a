#include <doctest.h>

#include <cmath>
#include <vector>

#include "xtropy/rss.hpp"

using namespace xtropy;

TEST_CASE("coefficient values for small n") {
    const RssCoefficients c1 = rss_coefficients(1);
    CHECK(c1.c == std::vector<double>{1.0});
    CHECK(c1.q_exact == Rational{1, 1, true});

    const RssCoefficients c2 = rss_coefficients(2);
    CHECK(c2.c_exact[0] == Rational{2, 3, true});
    CHECK(c2.c_exact[1] == Rational{2, 3, true});
    CHECK(c2.q_exact == Rational{16, 9, true});
    CHECK(c2.q_n == doctest::Approx(16.0 / 9.0).epsilon(1e-15));

    const RssCoefficients c3 = rss_coefficients(3);
    CHECK(c3.c_exact[0] == Rational{3, 5, true});
    CHECK(c3.c_exact[1] == Rational{2, 5, true});
    CHECK(c3.c_exact[2] == Rational{3, 5, true});
    CHECK(c3.q_exact == Rational{486, 125, true});

    CHECK_THROWS_AS(rss_coefficients(0), InvalidParameter);
}

TEST_CASE("coefficient symmetry and range up to n = 30") {
    for (int n = 1; n <= 30; ++n) {
        const RssCoefficients c = rss_coefficients(n);
        for (int i = 0; i < n; ++i) {
            CHECK(c.c[i] == c.c[n - 1 - i]);  // exact, same factored integers
            CHECK(c.c[i] > 0.0);
            CHECK(c.c[i] <= 1.0);
        }
    }
    // n = 20 keeps exact per-coefficient fractions: c_{1,20} = 20/39
    const RssCoefficients c20 = rss_coefficients(20);
    CHECK(c20.c_exact[0] == Rational{20, 39, true});
}

TEST_CASE("srs extropy") {
    for (int n : {1, 2, 5})
        CHECK(srs_extropy(make_uniform(0.0, 1.0), WeightFunction::unit(), n).value ==
              doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(srs_extropy(make_exponential(1.0), WeightFunction::power(1.0), 2).value ==
          doctest::Approx(-1.0 / 32.0).epsilon(1e-9));
    CHECK(srs_extropy(make_linear_rising(), WeightFunction::power(1.0), 1).value ==
          doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("rss extropy worked values") {
    CHECK(rss_extropy(make_uniform(0.0, 1.0), WeightFunction::unit(), 2).value ==
          doctest::Approx(-8.0 / 9.0).epsilon(1e-10));
    CHECK(rss_extropy(make_exponential(1.0), WeightFunction::power(1.0), 2).value ==
          doctest::Approx(-13.0 / 288.0).epsilon(1e-9));
    // symmetric law with odd weight vanishes for odd n
    CHECK(std::abs(rss_extropy(make_uniform(-1.0, 1.0), WeightFunction::power(1.0), 3).value) <
          1e-8);
}

TEST_CASE("rss extropy n=1 reduces to the plain value") {
    for (const DistPtr& d : {make_exponential(1.0), make_power(2.0), make_linear_falling()}) {
        const double direct =
            general_weighted_extropy(d, WeightFunction::power(1.0)).value;
        CHECK(rss_extropy(d, WeightFunction::power(1.0), 1).value ==
              doctest::Approx(direct).epsilon(1e-10));
        CHECK(srs_extropy(d, WeightFunction::power(1.0), 1).value ==
              doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("product formula matches the direct x-space product") {
    const std::vector<DistPtr> dists = {make_uniform(0.0, 1.0), make_power(2.0),
                                        make_exponential(1.0), make_pareto(3.0),
                                        make_linear_falling()};
    const std::vector<WeightFunction> weights = {WeightFunction::unit(),
                                                 WeightFunction::power(1.0)};
    for (const DistPtr& d : dists)
        for (const WeightFunction& w : weights)
            for (int n : {1, 2, 3}) {
                const double a = rss_extropy(d, w, n).value;
                const double b = rss_extropy_direct(d, w, n).value;
                CHECK(std::abs(a - b) <= 1e-7 * std::max(1.0, std::abs(a)));
            }
}

TEST_CASE("divergent factors report their index") {
    try {
        rss_extropy(make_pareto(1.0), WeightFunction::power(3.0), 2);
        FAIL("expected divergence");
    } catch (const DivergenceError& e) {
        CHECK(e.factor_index >= 1);
        CHECK(e.factor_index <= 2);
    }
}

TEST_CASE("ratio bound values") {
    CHECK(rss_srs_ratio_bound(2) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(rss_srs_ratio_bound(3) == doctest::Approx(182.25).epsilon(1e-12));
    CHECK(rss_srs_ratio_bound(4) ==
          doctest::Approx(1358954496.0 / 531441.0).epsilon(1e-12));
    CHECK_THROWS_AS(rss_srs_ratio_bound(1), InvalidParameter);
}

TEST_CASE("ratio bound dominates the observed quotient") {
    const double rss = rss_extropy(make_exponential(1.0), WeightFunction::power(1.0), 2).value;
    const double srs = srs_extropy(make_exponential(1.0), WeightFunction::power(1.0), 2).value;
    CHECK(rss / srs == doctest::Approx(13.0 / 9.0).epsilon(1e-9));
    CHECK(rss / srs <= rss_srs_ratio_bound(2));

    for (int n : {2, 3, 4}) {
        const double r = rss_extropy(make_uniform(0.0, 1.0), WeightFunction::unit(), n).value;
        const double s = srs_extropy(make_uniform(0.0, 1.0), WeightFunction::unit(), n).value;
        CHECK(r / s <= rss_srs_ratio_bound(n));
    }
}
