#pragma once

#include <utility>

#include "xtropy/common.hpp"

namespace xtropy {

enum class FormulaId { power, exponential, pareto, linear_pair };

struct ClosedFormReport {
    double value = 0.0;
    FormulaId formula_id = FormulaId::power;
    /// True only for the power formula, whose printed denominator gamma
    /// argument needs a 1/theta correction to match the direct integral.
    bool correction_applied = false;
};

/// RSS general weighted extropy of the power law F(x)=x^theta with w(x)=x^m:
///   -(Q_n/2) theta^n prod_i (2n-1)! Gamma((m+2i theta-1)/theta)
///                          / ((2i-2)! Gamma((m+(2n+1)theta-1)/theta)).
ClosedFormReport power_rss_closed(double theta, double m, int n);

/// RSS general weighted extropy of Exponential(lambda) with w(x)=x^m,
/// m a positive integer:
///   -(Q_n (2n-1)!!)/(2^(n+1) n^n) lambda^(-n(m-1)) prod_i E(Z_{2i-1:2n}^m).
ClosedFormReport exponential_rss_closed(double lambda, int m, int n);

/// E(Z_{2i-1:2n}^m) for standard-exponential order statistics, by
/// quadrature against the order-statistic density. The m=1 case has the
/// harmonic-sum identity E(Z_{k:N}) = sum_{j=N-k+1}^{N} 1/j as an oracle.
double exp_orderstat_moment(int i, int n, double m);

/// Harmonic-sum mean of the k-th order statistic of N unit exponentials.
double exp_orderstat_mean_harmonic(int k, int N);

/// RSS general weighted extropy of Pareto(alpha) with w(x)=x^m:
///   -(Q_n/2) alpha^n prod_i (2n-1)!/(2n-2i)!
///        * Gamma((2n alpha - 2i alpha + 2 alpha - m + 1)/alpha)
///        / Gamma((alpha + 2n alpha - m + 1)/alpha).
/// Throws DivergenceError when any gamma argument is <= 0.
ClosedFormReport pareto_rss_closed(double alpha, double m, int n);

/// (J^{x^m}(X), J^{x^m}(Y)) for the density pair f_X=2x, f_Y=2(1-x):
///   -2/(m+3) and -2(1/(m+1) - 2/(m+2) + 1/(m+3)).
std::pair<double, double> linear_pair_values(double m);

}  // namespace xtropy
