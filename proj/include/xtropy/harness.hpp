#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xtropy/extropy.hpp"
#include "xtropy/orders.hpp"
#include "xtropy/rss.hpp"

namespace xtropy {

/// Outcome of one theorem suite. A case "passes" when its conclusion holds
/// within slack; hypothesis-failing cases are skipped, not failed.
struct TheoremReport {
    std::string theorem_id;
    int cases_run = 0;
    int cases_passed = 0;
    int cases_skipped = 0;
    bool applicable = true;       // false when the suite's own hypothesis failed
    double worst_margin = 0.0;    // min over run cases of (slack-signed margin)
    std::string witness;          // description of the worst case

    bool pass() const { return applicable && cases_passed == cases_run; }
};

/// Absolute slack absorbing quadrature error in conclusion comparisons.
inline constexpr double kConclusionSlack = 1e-8;

struct ComparisonCase {
    DistPtr X;
    DistPtr Y;
    WeightFunction w1 = WeightFunction::unit();
    WeightFunction w2 = WeightFunction::unit();
    std::string label;
};

/// Theorem "dispersive order transfers to extropy order", single-variable
/// and RSS statements. Hypothesis gate: w1 increasing, w1 >= w2 on the
/// grid, X <=disp Y, plus the support condition in one of the three forms
/// that make the proof's quantile comparison available (common finite
/// upper endpoint, X >=st Y, or pointwise Lambda domination).
TheoremReport verify_disp_comparison(const std::vector<ComparisonCase>& pairs, int n,
                                     double tol = 1e-10);

/// Same conclusion reached through a transform order (convex-transform,
/// star or superadditive) plus the f(0) >= g(0) > 0 lemma gate.
TheoremReport verify_transform_order_comparison(const std::vector<ComparisonCase>& pairs,
                                                StochasticOrder order, int n,
                                                double tol = 1e-10);

/// Transfer criterion suite over arbitrary pairs: asserts that no
/// hypothesis-satisfying case violates the RSS conclusion.
TheoremReport verify_delta_criterion(const std::vector<ComparisonCase>& pairs, int n,
                                     int grid_size = 1024, double tol = 1e-10);

/// Order-statistic extropy monotonicity under the IRFR hypothesis:
/// part (a) decreasing in i for increasing weights, part (b) increasing in
/// n for decreasing weights. A divergent J^w(X_{n:n}) participates in the
/// chain as -infinity.
TheoremReport verify_orderstat_monotonicity(const DistPtr& dist, const WeightFunction& w,
                                            int n_max, double tol = 1e-10);

/// Scale transform phi(x) = c x with power weight x^m: the RSS extropies
/// order by the sign of c^(m-1) - 1.
TheoremReport verify_transformation(const DistPtr& dist, double m, double c, int n,
                                    double tol = 1e-10);

/// Symmetry characterization: symmetric-about-zero law and odd weight give
/// J^w(X_RSS^(n)) = 0 for every odd n; a shifted control must not vanish.
TheoremReport verify_symmetry_characterization(const DistPtr& dist, const WeightFunction& w,
                                               const std::vector<int>& odd_n,
                                               double tol = 1e-10);

/// Monotone chain across the RSS elements J^w(X_{(i:n)i}) driven by the
/// direction of Lambda: rising toward the median index ceil(n/2) when
/// Lambda is decreasing, falling from the median to i = n when Lambda is
/// increasing.
TheoremReport verify_rss_element_monotone(const DistPtr& dist, const WeightFunction& w,
                                          int n, double tol = 1e-10);

/// Quotient J_RSS / J_SRS (both negative) against the combinatorial bound.
TheoremReport verify_bound(const DistPtr& dist, const WeightFunction& w,
                           const std::vector<int>& n_list, double tol = 1e-10);

/// Deterministic randomized pair grid used by the comparison suites.
std::vector<ComparisonCase> random_comparison_cases(int count, std::uint64_t seed);

/// Two-column human-readable rendering.
std::string report_table(const TheoremReport& report);

/// Write a reproducible witness file for a conclusion violation; returns
/// the path written.
std::string dump_witness(const TheoremReport& report, const std::string& directory = ".");

}  // namespace xtropy
