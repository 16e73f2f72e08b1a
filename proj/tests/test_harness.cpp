#include <doctest.h>

#include <cmath>
#include <vector>

#include "xtropy/harness.hpp"

using namespace xtropy;

TEST_CASE("dispersive comparison suite on handpicked pairs") {
    std::vector<ComparisonCase> pairs;
    pairs.push_back({make_exponential(2.0), make_exponential(1.0), WeightFunction::power(1.0),
                     WeightFunction::power(1.0), "exp rate pair"});
    pairs.push_back({make_power(2.0), make_power(2.0), WeightFunction::power(2.0),
                     WeightFunction::power(2.0), "identical"});
    // dominance of x^2 over x fails below 1
    pairs.push_back({make_exponential(2.0), make_exponential(1.0), WeightFunction::power(2.0),
                     WeightFunction::power(1.0), "dominance fails"});

    const TheoremReport r = verify_disp_comparison(pairs, 2);
    CHECK(r.cases_run == 2);
    CHECK(r.cases_skipped == 1);
    CHECK(r.pass());
}

TEST_CASE("dispersive comparison suite over the randomized grid") {
    const auto pairs = random_comparison_cases(60, 11);
    CHECK(pairs.size() == 60);
    const TheoremReport r = verify_disp_comparison(pairs, 2);
    CHECK(r.pass());
    CHECK(r.cases_run >= 15);  // the constructed kinds mostly satisfy the gate
}

TEST_CASE("transform order comparison suites") {
    std::vector<ComparisonCase> pairs;
    pairs.push_back({make_exponential(2.0), make_exponential(1.0), WeightFunction::power(1.0),
                     WeightFunction::power(1.0), "exp pair"});
    pairs.push_back({make_scaled(make_linear_falling(), 0.5), make_linear_falling(),
                     WeightFunction::power(1.0), WeightFunction::power(1.0), "compressed"});
    pairs.push_back({make_power(2.0), make_power(3.0), WeightFunction::unit(),
                     WeightFunction::unit(), "gate fails: f(0)=0"});
    for (StochasticOrder o : {StochasticOrder::convex_transform, StochasticOrder::star,
                              StochasticOrder::superadditive}) {
        const TheoremReport r = verify_transform_order_comparison(pairs, o, 2);
        INFO(order_name(o));
        CHECK(r.pass());
        CHECK(r.cases_run >= 2);
    }
    CHECK_THROWS_AS(verify_transform_order_comparison(pairs, StochasticOrder::st, 2),
                    InvalidParameter);
}

TEST_CASE("delta criterion suite never sees hypothesis without conclusion") {
    const auto pairs = random_comparison_cases(50, 7);
    const TheoremReport r = verify_delta_criterion(pairs, 2);
    CHECK(r.pass());
    CHECK(r.cases_run + r.cases_skipped == 50);
}

TEST_CASE("order statistic monotonicity under IRFR") {
    const TheoremReport r = verify_orderstat_monotonicity(make_neg_sqrt_exp(),
                                                          WeightFunction::exponential(), 4);
    CHECK(r.applicable);
    CHECK(r.pass());
    CHECK(r.cases_run == 2 + 3 + 4 - 3);  // part (a) chains for n = 2,3,4

    const TheoremReport vacuous = verify_orderstat_monotonicity(
        make_neg_sqrt_exp(), WeightFunction::exponential(), 1);
    CHECK(vacuous.pass());
    CHECK(vacuous.cases_run == 0);

    const TheoremReport na =
        verify_orderstat_monotonicity(make_power(2.0), WeightFunction::exponential(), 3);
    CHECK_FALSE(na.applicable);
    CHECK_FALSE(na.pass());
}

TEST_CASE("scale transformation comparison") {
    // c^(m-1) = 2 >= 1: J^w(X_RSS) >= J^w(Z_RSS); values -1/8 vs -1/4
    const TheoremReport r = verify_transformation(make_exponential(1.0), 2.0, 2.0, 1);
    CHECK(r.pass());
    CHECK(r.worst_margin == doctest::Approx(0.125).epsilon(1e-7));

    // m = 1: both branches active, equality within slack
    const TheoremReport eq = verify_transformation(make_exponential(1.0), 1.0, 3.0, 2);
    CHECK(eq.pass());
    CHECK(eq.cases_run == 2);

    const TheoremReport ident = verify_transformation(make_power(2.0), 2.0, 1.0, 2);
    CHECK(ident.pass());
}

TEST_CASE("symmetry characterization") {
    const TheoremReport uni = verify_symmetry_characterization(
        make_uniform(-1.0, 1.0), WeightFunction::power(1.0), {1, 3, 5});
    CHECK(uni.applicable);
    CHECK(uni.pass());
    CHECK(uni.cases_run == 4);  // three odd n plus the shifted control

    const TheoremReport tri = verify_symmetry_characterization(
        make_triangular(-1.0, 1.0), WeightFunction::power(1.0), {1, 3, 5});
    CHECK(tri.pass());

    const TheoremReport na = verify_symmetry_characterization(
        make_uniform(0.0, 2.0), WeightFunction::power(1.0), {1, 3});
    CHECK_FALSE(na.applicable);

    const TheoremReport evens = verify_symmetry_characterization(
        make_uniform(-1.0, 1.0), WeightFunction::power(1.0), {1, 2, 3});
    CHECK(evens.cases_skipped == 1);
}

TEST_CASE("rss element monotone chains") {
    const TheoremReport dec =
        verify_rss_element_monotone(make_exponential(1.0), WeightFunction::unit(), 3);
    CHECK(dec.applicable);
    CHECK(dec.pass());

    const TheoremReport inc =
        verify_rss_element_monotone(make_power(3.0), WeightFunction::unit(), 3);
    CHECK(inc.applicable);
    CHECK(inc.pass());

    const TheoremReport vac =
        verify_rss_element_monotone(make_exponential(1.0), WeightFunction::unit(), 1);
    CHECK(vac.pass());
    CHECK(vac.cases_run == 0);
}

TEST_CASE("rss/srs bound suite") {
    const TheoremReport exp_report =
        verify_bound(make_exponential(1.0), WeightFunction::power(1.0), {2, 3, 4});
    CHECK(exp_report.pass());
    CHECK(exp_report.cases_run == 3);

    const TheoremReport uni_report =
        verify_bound(make_uniform(0.0, 1.0), WeightFunction::unit(), {1, 2, 3});
    CHECK(uni_report.pass());
    CHECK(uni_report.cases_skipped == 1);  // n=1 is outside the bound's domain

    // symmetric law with odd weight: SRS extropy vanishes, case is skipped
    const TheoremReport zero =
        verify_bound(make_uniform(-1.0, 1.0), WeightFunction::power(1.0), {2});
    CHECK(zero.cases_skipped == 1);
}

TEST_CASE("report rendering") {
    const TheoremReport r =
        verify_bound(make_exponential(1.0), WeightFunction::power(1.0), {2});
    const std::string table = report_table(r);
    CHECK(table.find("rss-srs-bound") != std::string::npos);
    CHECK(table.find("PASS") != std::string::npos);
}

TEST_CASE("suites are deterministic for a fixed case grid") {
    const auto pairs = random_comparison_cases(20, 5);
    const TheoremReport a = verify_disp_comparison(pairs, 2);
    const TheoremReport b = verify_disp_comparison(pairs, 2);
    CHECK(a.cases_run == b.cases_run);
    CHECK(a.cases_skipped == b.cases_skipped);
    CHECK(a.worst_margin == b.worst_margin);
    CHECK(a.witness == b.witness);
}
