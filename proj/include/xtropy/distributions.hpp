#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xtropy/common.hpp"

namespace xtropy {

/// Open support interval (lower, upper); endpoints may be infinite.
struct Support {
    double lower;
    double upper;

    bool bounded_below() const;
    bool bounded_above() const;
    bool contains(double x) const { return x > lower && x < upper; }
};

/// A univariate absolutely continuous law exposed through pdf, cdf,
/// quantile and support. All implementations are immutable after
/// construction; evaluation is pure and thread-safe.
class Distribution {
public:
    virtual ~Distribution() = default;

    /// Density; zero outside the support.
    virtual double pdf(double x) const = 0;
    /// Distribution function, clamped to 0/1 outside the support.
    virtual double cdf(double x) const = 0;
    /// Inverse of cdf on (0,1). Throws DomainError for u outside (0,1).
    /// For unbounded supports u is clamped to [1e-12, 1-1e-12].
    virtual double quantile(double u) const = 0;
    virtual Support support() const = 0;
    /// Canonical CLI spec string, e.g. "exp:1", "uniform:0,1".
    virtual std::string spec() const = 0;

    /// Reverse hazard r(x) = f(x)/F(x). Throws DomainError where F(x) = 0.
    double reverse_hazard(double x) const;
};

using DistPtr = std::shared_ptr<Distribution>;

DistPtr make_uniform(double a, double b);
DistPtr make_power(double theta);              // F(x) = x^theta on (0,1)
DistPtr make_exponential(double lambda);       // F(x) = 1 - e^(-lambda x)
DistPtr make_pareto(double alpha);             // F(x) = 1 - x^(-alpha), x > 1
DistPtr make_beta_kernel(int a, int b);        // density ~ u^(a-1)(1-u)^(b-1)
DistPtr make_linear_rising();                  // f(x) = 2x on (0,1)
DistPtr make_linear_falling();                 // f(x) = 2(1-x) on (0,1)
DistPtr make_neg_sqrt_exp();                   // F(x) = exp(-sqrt(-x)) on (-inf,0)
DistPtr make_triangular(double a, double b);   // symmetric triangle on (a,b)
DistPtr make_scaled(DistPtr base, double c);   // law of c*X, c > 0
DistPtr make_shifted(DistPtr base, double d);  // law of X + d

/// Distribution specified by a monotone quantile table (u_k, x_k),
/// interpolated with a monotone cubic; pdf is 1/quantile-density.
DistPtr make_custom(std::vector<double> u, std::vector<double> x);

/// Parse the CLI grammar `family:param[,param]`:
///   uniform:a,b  power:theta  exp:lambda  pareto:alpha  beta:a,b
///   triangular:a,b  linear-rising  linear-falling  negsqrtexp
///   scaled:<base spec>,c=<c>  shifted:<base spec>,d=<d>  custom:<json file>
DistPtr parse_distribution(const std::string& spec);

}  // namespace xtropy
