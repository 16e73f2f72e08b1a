#pragma once

#include <cstdint>
#include <vector>

#include "xtropy/extropy.hpp"

namespace xtropy {

/// Reduced fraction with 64-bit terms; `valid` is false when the exact
/// value does not fit.
struct Rational {
    long long num = 0;
    long long den = 1;
    bool valid = false;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const {
        return valid && o.valid && num == o.num && den == o.den;
    }
};

/// c_{i,n} = C(2i-2,i-1) C(2n-2i,n-i) / C(2n-1,n-1) and Q_n = n^n prod c_{i,n}.
/// Exact (prime-factored) arithmetic up to n = 64; the doubles are the
/// correctly rounded values of the exact fractions. `c_exact[i]`/`q_exact`
/// carry the reduced fractions whenever they fit in 64 bits.
struct RssCoefficients {
    int n = 0;
    std::vector<double> c;
    double q_n = 1.0;
    double log_q_n = 0.0;
    std::vector<Rational> c_exact;
    Rational q_exact;
};

RssCoefficients rss_coefficients(int n);

/// J^w(X_SRS^(n)) = -1/2 (-2 J^w(X))^n.
ExtropyValue srs_extropy(const DistPtr& dist, const WeightFunction& w, int n,
                         double tol = 1e-10);

/// J^w(X_RSS^(n)) = -(Q_n/2) prod_i E(Lambda(B_{2i-1:2n-1})), cross-checked
/// against the direct x-space product -1/2 prod_i (-2 J^w(X_{(i:n)i})).
/// A divergent factor raises DivergenceError carrying the factor index.
ExtropyValue rss_extropy(const DistPtr& dist, const WeightFunction& w, int n,
                         double tol = 1e-10);

/// The direct route alone: per-order-statistic integrals
/// J^w(X_{(i:n)i}) = -1/2 int w(x) f_{i:n}^2(x) dx in x space, multiplied up.
ExtropyValue rss_extropy_direct(const DistPtr& dist, const WeightFunction& w, int n,
                                double tol = 1e-10);

/// Right-hand side of the RSS/SRS quotient bound
///   n^(2n) / (n-1)^(2(n-1)(n-2)) * prod_{i=2}^{n-1} C(n-1,i-1)^2 (i-1)^(2i-2) (n-i)^(2n-2i),
/// evaluated in log space. Requires n >= 2.
double rss_srs_ratio_bound(int n);

}  // namespace xtropy
