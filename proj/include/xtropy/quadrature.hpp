#pragma once

#include <functional>

#include "xtropy/common.hpp"

namespace xtropy {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// Beta order-statistic kernel: density phi_{a:a+b-1}(u) ~ u^(a-1)(1-u)^(b-1),
/// normalized through log-gamma so large n never overflows.
struct BetaOrderKernel {
    int a = 1;
    int b = 1;

    BetaOrderKernel(int a_, int b_);

    /// phi_{2i-1:2n-1}, the kernel of the RSS product formula.
    static BetaOrderKernel rss_factor(int i, int n) {
        return BetaOrderKernel(2 * i - 1, 2 * (n - i) + 1);
    }

    double log_norm() const;       // log of the normalizing constant
    double pdf(double u) const;    // density at u in (0,1)
    double mean() const;           // a / (a+b)
};

inline double beta_kernel_pdf(const BetaOrderKernel& k, double u) { return k.pdf(u); }

/// Globally adaptive Gauss-Kronrod 7-15 integration on (lower, upper).
/// Open rule: endpoints are never evaluated; infinite endpoints are mapped
/// to (0,1) with the rational transform x = t/(1-t).
/// Throws DivergenceError when refinement stalls on an irreducible
/// singularity, ConvergenceError when the budget runs out otherwise.
QuadratureResult integrate(const std::function<double(double)>& f, double lower,
                           double upper, double tol = 1e-10);

/// E(g(B)) for B distributed with the given beta kernel.
QuadratureResult beta_expectation(const std::function<double(double)>& g,
                                  const BetaOrderKernel& kernel, double tol = 1e-10);

// Log-space combinatorial helpers (exact enough up to desk-scale n).
double log_factorial(long n);
double log_choose(long n, long k);
double log_double_factorial_odd(long n);  // log((2n-1)!!)

}  // namespace xtropy
