#pragma once

#include <string>

#include "xtropy/distributions.hpp"
#include "xtropy/quadrature.hpp"
#include "xtropy/weights.hpp"

namespace xtropy {

enum class Method { quadrature, closed_form, monte_carlo };

std::string method_name(Method m);

/// A signed extropy with its numerical-error estimate and provenance.
struct ExtropyValue {
    double value = 0.0;
    double error_estimate = 0.0;
    Method method = Method::quadrature;
    std::string note;  // set e.g. when the reverse-hazard route diverged
};

/// The quantile-space profile u -> w(F^-1(u)) * f(F^-1(u)); every formula
/// in the library integrates against it.
class LambdaProfile {
public:
    LambdaProfile(DistPtr dist, WeightFunction weight);

    double operator()(double u) const;

    const Distribution& dist() const { return *dist_; }
    const WeightFunction& weight() const { return weight_; }

private:
    DistPtr dist_;
    WeightFunction weight_;
};

/// J^w(X) = -1/2 E(Lambda(U)), U uniform on (0,1). Unit weight gives the
/// plain extropy, w(x)=x the weighted extropy.
ExtropyValue general_weighted_extropy(const DistPtr& dist, const WeightFunction& w,
                                      double tol = 1e-10);

/// J^w(X_{i:n}) through the beta-kernel representation
///   -(n c_{i,n}/2) E(Lambda(B_{2i-1:2n-1})),
/// cross-checked against the reverse-hazard representation
///   -(c_{i,n}(2i-1)/4) E(w(F^-1) r(F^-1) at B_{2i:2n}).
/// When the reverse-hazard route diverges the beta-kernel value is
/// returned with a warning note.
ExtropyValue order_statistic_extropy(const DistPtr& dist, const WeightFunction& w,
                                     int i, int n, double tol = 1e-10);

}  // namespace xtropy
