#pragma once

#include <string>
#include <vector>

#include "xtropy/distributions.hpp"
#include "xtropy/weights.hpp"

namespace xtropy {

enum class StochasticOrder {
    st,                // F-bar(x) <= G-bar(x) everywhere
    lr,                // g(x)f(y) <= f(x)g(y) for x < y
    hr,                // G-bar/F-bar increasing
    disp,              // G^-1 F(x) - x increasing
    convex_transform,  // G^-1 F convex
    star,              // G^-1 F(x)/x increasing
    superadditive,     // G^-1 F(x+y) >= G^-1 F(x) + G^-1 F(y)
    irfr,              // F log-convex (increasing reverse failure rate)
};

std::string order_name(StochasticOrder o);

struct OrderVerdict {
    StochasticOrder order = StochasticOrder::st;
    bool holds = false;
    double worst_violation = 0.0;
    double worst_point = 0.0;
};

/// Grid checker for "X smaller than Y in the given order". Numeric slack
/// 1e-9; grid_size must be >= 16.
OrderVerdict check_order(StochasticOrder kind, const DistPtr& X, const DistPtr& Y,
                         int grid_size = 1024);

/// IRFR aging-class check: second differences of ln F on a grid.
OrderVerdict check_irfr(const DistPtr& X, int grid_size = 1024);

/// Quantile-density domination f(F^-1(u)) >= g(G^-1(u)) on a u-grid,
/// the form in which the dispersive hypothesis enters the proofs.
OrderVerdict check_quantile_density_domination(const DistPtr& X, const DistPtr& Y,
                                               int grid_size = 1024);

/// Sign partition of Delta(u) = Lambda_X^{w1}(u) - Lambda_Y^{w2}(u) with the
/// per-kernel inf/sup data of the transfer criterion. Grid points with
/// |Delta| <= 1e-12 belong to neither set.
struct DeltaPartition {
    std::vector<double> grid;
    std::vector<double> delta;
    std::vector<int> a1;                  // indices with Delta > 0
    std::vector<int> a2;                  // indices with Delta < 0
    std::vector<double> inf_phi_on_a1;    // per i = 1..n; +inf when A1 empty
    std::vector<double> sup_phi_on_a2;    // per i = 1..n; -inf when A2 empty
};

struct DeltaCriterionResult {
    DeltaPartition partition;
    bool hypothesis_holds = false;   // kernel condition for all i AND J^{w1}(X) <= J^{w2}(Y)
    bool conclusion_holds = false;   // RSS extropies ordered the same way
};

/// Transfer criterion: if inf_{A1} phi_i >= sup_{A2} phi_i for every
/// i = 1..n and J^{w1}(X) <= J^{w2}(Y), then the RSS extropies are ordered.
/// Throws TheoremViolation if the hypothesis holds and the conclusion fails.
DeltaCriterionResult delta_criterion(const DistPtr& X, const DistPtr& Y,
                                     const WeightFunction& w1, const WeightFunction& w2,
                                     int n, int grid_size = 1024, double tol = 1e-10);

}  // namespace xtropy
