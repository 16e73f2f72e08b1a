// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are pinned here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "xtropy/closed_forms.hpp"
#include "xtropy/harness.hpp"
#include "xtropy/montecarlo.hpp"

using namespace xtropy;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over runtime budget");
    }
    std::printf("criterion %d [%s]: %s (%.2fs)%s%s\n", id, label.c_str(),
                ok ? "PASS" : "FAIL", elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool close_abs(double got, double want, double tol) { return std::abs(got - want) < tol; }
bool close_rel(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(1e-300, std::abs(want));
}

}  // namespace

int main() {
    // 1. Worked density pair: plain, weighted and general weighted extropy.
    criterion(1, "worked density pair", 1.0, [](std::string& detail) {
        const DistPtr X = make_linear_rising(), Y = make_linear_falling();
        bool ok = true;
        ok &= close_abs(general_weighted_extropy(X, WeightFunction::unit()).value, -2.0 / 3.0,
                        1e-8);
        ok &= close_abs(general_weighted_extropy(Y, WeightFunction::unit()).value, -2.0 / 3.0,
                        1e-8);
        ok &= close_abs(general_weighted_extropy(X, WeightFunction::power(1.0)).value, -0.5,
                        1e-8);
        ok &= close_abs(general_weighted_extropy(Y, WeightFunction::power(1.0)).value,
                        -1.0 / 6.0, 1e-8);
        for (double m : {0.5, 1.0, 2.0, 5.0})
            ok &= close_abs(general_weighted_extropy(X, WeightFunction::power(m)).value,
                            -2.0 / (m + 3.0), 1e-8);
        if (!ok) detail = "a pair value missed 1e-8";
        return ok;
    });

    // 2. Coefficient algebra: symmetry and exact small-n rationals.
    criterion(2, "rss coefficients", 5.0, [](std::string& detail) {
        bool ok = true;
        for (int n = 1; n <= 30; ++n) {
            const RssCoefficients c = rss_coefficients(n);
            for (int i = 0; i < n; ++i) ok &= (c.c[i] == c.c[n - 1 - i]);
        }
        ok &= (rss_coefficients(2).q_exact == Rational{16, 9, true});
        ok &= (rss_coefficients(3).q_exact == Rational{486, 125, true});
        if (!ok) detail = "symmetry or exact rational mismatch";
        return ok;
    });

    // 3. Product formula vs direct per-order-statistic integrals, 20 cases.
    criterion(3, "rss formula consistency", 30.0, [](std::string& detail) {
        struct Case { DistPtr d; WeightFunction w; };
        const std::vector<Case> base = {
            {make_uniform(0.0, 1.0), WeightFunction::unit()},
            {make_power(2.0), WeightFunction::power(1.0)},
            {make_power(3.0), WeightFunction::unit()},
            {make_exponential(1.0), WeightFunction::power(1.0)},
            {make_exponential(0.5), WeightFunction::power(2.0)},
            {make_pareto(3.0), WeightFunction::power(1.0)},
            {make_linear_rising(), WeightFunction::power(2.0)},
            {make_linear_falling(), WeightFunction::unit()},
        };
        int cases = 0;
        bool ok = true;
        for (const Case& c : base)
            for (int n : {1, 2, 3}) {
                if (cases >= 20 && n > 1) continue;
                const double a = rss_extropy(c.d, c.w, n).value;
                const double b = rss_extropy_direct(c.d, c.w, n).value;
                if (!close_rel(a, b, 1e-7)) {
                    ok = false;
                    detail = c.d->spec() + " n=" + std::to_string(n);
                }
                ++cases;
            }
        if (cases < 20) {
            ok = false;
            detail = "grid too small";
        }
        return ok;
    });

    // 4. Closed forms against quadrature on the stated parameter grid.
    criterion(4, "closed-form oracle agreement", 30.0, [](std::string& detail) {
        bool ok = true;
        for (double theta : {1.5, 2.0, 3.0})
            for (double m : {1.0, 2.0})
                for (int n : {1, 2, 3}) {
                    const double q =
                        rss_extropy(make_power(theta), WeightFunction::power(m), n).value;
                    if (!close_rel(power_rss_closed(theta, m, n).value, q, 1e-7)) {
                        ok = false;
                        detail = "power theta=" + std::to_string(theta);
                    }
                }
        for (double lambda : {0.5, 1.0, 2.0})
            for (int m : {1, 2})
                for (int n : {1, 2, 3}) {
                    const double q =
                        rss_extropy(make_exponential(lambda), WeightFunction::power(m), n).value;
                    if (!close_rel(exponential_rss_closed(lambda, m, n).value, q, 1e-7)) {
                        ok = false;
                        detail = "exp lambda=" + std::to_string(lambda);
                    }
                }
        for (double alpha : {1.5, 2.0, 3.0})
            for (double m : {1.0, 2.0})
                for (int n : {1, 2, 3}) {
                    if (!(m < 2.0 * alpha + 1.0)) continue;  // integrability region
                    const double q =
                        rss_extropy(make_pareto(alpha), WeightFunction::power(m), n).value;
                    if (!close_rel(pareto_rss_closed(alpha, m, n).value, q, 1e-7)) {
                        ok = false;
                        detail = "pareto alpha=" + std::to_string(alpha);
                    }
                }
        ok &= close_abs(exponential_rss_closed(1.0, 1, 2).value, -13.0 / 288.0, 1e-9);
        return ok;
    });

    // 5. RSS/SRS quotient bound over n in {2,3,4}.
    criterion(5, "rss/srs ratio bound", 10.0, [](std::string& detail) {
        struct Case { DistPtr d; WeightFunction w; };
        const std::vector<Case> grid = {
            {make_exponential(1.0), WeightFunction::power(1.0)},
            {make_uniform(0.0, 1.0), WeightFunction::unit()},
            {make_power(2.0), WeightFunction::power(1.0)},
            {make_pareto(3.0), WeightFunction::unit()},
            {make_linear_falling(), WeightFunction::power(1.0)},
        };
        bool ok = true;
        for (const Case& c : grid)
            for (int n : {2, 3, 4}) {
                const double r = rss_extropy(c.d, c.w, n).value;
                const double s = srs_extropy(c.d, c.w, n).value;
                if (std::abs(s) < 1e-12) continue;
                if (!(r / s <= rss_srs_ratio_bound(n))) {
                    ok = false;
                    detail = c.d->spec() + " n=" + std::to_string(n);
                }
            }
        const double q13 =
            rss_extropy(make_exponential(1.0), WeightFunction::power(1.0), 2).value /
            srs_extropy(make_exponential(1.0), WeightFunction::power(1.0), 2).value;
        ok &= close_abs(q13, 13.0 / 9.0, 1e-8) && q13 <= 16.0;
        return ok;
    });

    // 6. Symmetry characterization with shifted controls.
    criterion(6, "symmetry characterization", 5.0, [](std::string& detail) {
        bool ok = true;
        for (const DistPtr& d : {make_uniform(-1.0, 1.0), make_triangular(-1.0, 1.0)}) {
            for (int n : {1, 3, 5}) {
                const double v = rss_extropy(d, WeightFunction::power(1.0), n).value;
                if (!(std::abs(v) < 1e-8)) {
                    ok = false;
                    detail = d->spec() + " n=" + std::to_string(n);
                }
            }
            const double control =
                rss_extropy(make_shifted(d, 1.0), WeightFunction::power(1.0), 1).value;
            if (!(std::abs(control) > 1e-3)) {
                ok = false;
                detail = "control for " + d->spec();
            }
        }
        return ok;
    });

    // 7. Randomized comparison suites: no conclusion violation among
    //    hypothesis-satisfying pairs.
    criterion(7, "order-comparison suites", 120.0, [](std::string& detail) {
        const auto pairs = random_comparison_cases(60, 2024);
        bool ok = pairs.size() >= 50;
        const TheoremReport disp = verify_disp_comparison(pairs, 2);
        ok &= disp.pass();
        for (StochasticOrder o : {StochasticOrder::convex_transform, StochasticOrder::star,
                                  StochasticOrder::superadditive}) {
            const TheoremReport tr = verify_transform_order_comparison(pairs, o, 2);
            ok &= tr.pass();
            if (!tr.pass()) detail = "transform order " + order_name(o);
        }
        const TheoremReport delta = verify_delta_criterion(pairs, 2);
        ok &= delta.pass();
        if (!disp.pass()) detail = "disp suite: " + disp.witness;
        if (!delta.pass()) detail = "delta suite: " + delta.witness;
        return ok;
    });

    // 8. Monotone chains: RSS elements and order statistics under IRFR.
    criterion(8, "monotone suites", 60.0, [](std::string& detail) {
        bool ok = true;
        for (int n = 2; n <= 5; ++n) {
            const TheoremReport dec =
                verify_rss_element_monotone(make_exponential(1.0), WeightFunction::unit(), n);
            const TheoremReport inc =
                verify_rss_element_monotone(make_power(3.0), WeightFunction::unit(), n);
            ok &= dec.pass() && inc.pass();
            if (!dec.pass()) detail = "exp chain n=" + std::to_string(n);
            if (!inc.pass()) detail = "power chain n=" + std::to_string(n);
        }
        const TheoremReport irfr = verify_orderstat_monotonicity(
            make_neg_sqrt_exp(), WeightFunction::exponential(), 4);
        ok &= irfr.applicable && irfr.pass();
        if (!irfr.pass()) detail = "orderstat chain: " + irfr.witness;
        return ok;
    });

    // 9. Monte Carlo cross-check on a 12-case grid at one million draws.
    criterion(9, "monte carlo cross-check", 120.0, [](std::string& detail) {
        struct Case { DistPtr d; WeightFunction w; int n; };  // n = 0: single-variable
        const std::vector<Case> grid = {
            {make_linear_rising(), WeightFunction::power(1.0), 0},
            {make_exponential(1.0), WeightFunction::power(1.0), 0},
            {make_power(2.0), WeightFunction::power(2.0), 0},
            {make_pareto(3.0), WeightFunction::unit(), 0},
            {make_triangular(0.0, 1.0), WeightFunction::power(1.0), 0},
            {make_linear_falling(), WeightFunction::unit(), 0},
            {make_exponential(1.0), WeightFunction::power(1.0), 2},
            {make_uniform(0.0, 1.0), WeightFunction::power(1.0), 2},
            {make_power(2.0), WeightFunction::power(1.0), 2},
            {make_linear_falling(), WeightFunction::power(1.0), 3},
            {make_exponential(2.0), WeightFunction::unit(), 3},
            {make_pareto(3.0), WeightFunction::power(1.0), 2},
        };
        bool ok = grid.size() == 12;
        const long draws = 1000000;
        for (const Case& c : grid) {
            const RngSpec rng{20240807, static_cast<std::uint64_t>(c.n)};
            double quad = 0.0;
            McEstimate mc;
            if (c.n == 0) {
                quad = general_weighted_extropy(c.d, c.w).value;
                mc = mc_general_weighted_extropy(c.d, c.w, draws, rng);
            } else {
                quad = rss_extropy(c.d, c.w, c.n).value;
                mc = mc_rss_extropy(c.d, c.w, c.n, draws, rng);
            }
            if (!(std::abs(mc.value - quad) <= 4.0 * mc.std_error + 1e-12)) {
                ok = false;
                detail = c.d->spec() + "/" + c.w.spec() + " n=" + std::to_string(c.n);
            }
        }
        // determinism across reruns
        const McEstimate once = mc_general_weighted_extropy(
            make_exponential(1.0), WeightFunction::power(1.0), draws, RngSpec{11, 0});
        const McEstimate twice = mc_general_weighted_extropy(
            make_exponential(1.0), WeightFunction::power(1.0), draws, RngSpec{11, 0});
        ok &= (once.value == twice.value);
        return ok;
    });

    if (failures == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
