#include "xtropy/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xtropy/extropy.hpp"
#include "xtropy/rss.hpp"

namespace xtropy {

namespace {

constexpr double kSlack = 1e-9;
constexpr double kDeadBand = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(int grid_size) {
    if (grid_size < 16) throw InvalidParameter("order checks require grid_size >= 16");
}

// Interior quantile grid of one distribution.
std::vector<double> quantile_grid(const Distribution& d, int n) {
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j) xs[j] = d.quantile((j + 0.5) / n);
    return xs;
}

// Merged x-grid covering the supports of both laws.
std::vector<double> joint_grid(const Distribution& X, const Distribution& Y, int n) {
    std::vector<double> xs = quantile_grid(X, n / 2);
    std::vector<double> ys = quantile_grid(Y, n / 2);
    xs.insert(xs.end(), ys.begin(), ys.end());
    std::sort(xs.begin(), xs.end());
    return xs;
}

// Uniform x-grid over the (quantile-trimmed) support of X.
std::vector<double> uniform_grid(const Distribution& X, int n) {
    const Support s = X.support();
    const double a = s.bounded_below() ? s.lower : X.quantile(1e-4);
    const double b = s.bounded_above() ? s.upper : X.quantile(1.0 - 1e-4);
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j) xs[j] = a + (b - a) * (j + 0.5) / n;
    return xs;
}

OrderVerdict make_verdict(StochasticOrder order, double worst, double at) {
    return OrderVerdict{order, worst <= kSlack, worst, at};
}

OrderVerdict check_st(const DistPtr& X, const DistPtr& Y, int n) {
    double worst = -kInf, at = 0.0;
    for (double x : joint_grid(*X, *Y, n)) {
        const double v = Y->cdf(x) - X->cdf(x);  // F-bar(x) - G-bar(x)
        if (v > worst) {
            worst = v;
            at = x;
        }
    }
    return make_verdict(StochasticOrder::st, worst, at);
}

OrderVerdict check_lr(const DistPtr& X, const DistPtr& Y, int n) {
    const int m = std::min(n, 256);
    const std::vector<double> xs = joint_grid(*X, *Y, m);
    std::vector<double> f(xs.size()), g(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) {
        f[j] = X->pdf(xs[j]);
        g[j] = Y->pdf(xs[j]);
    }
    double worst = -kInf, at = 0.0;
    for (size_t j = 0; j < xs.size(); ++j)
        for (size_t k = j + 1; k < xs.size(); ++k) {
            const double v = g[j] * f[k] - f[j] * g[k];
            if (v > worst) {
                worst = v;
                at = xs[j];
            }
        }
    return make_verdict(StochasticOrder::lr, worst, at);
}

OrderVerdict check_hr(const DistPtr& X, const DistPtr& Y, int n) {
    const Support sx = X->support(), sy = Y->support();
    const double lo = std::max(sx.lower, sy.lower), hi = std::min(sx.upper, sy.upper);
    if (!(lo < hi)) throw DomainError("hazard rate order needs overlapping supports");
    double worst = -kInf, at = 0.0, prev = -kInf;
    for (double x : quantile_grid(*X, n)) {
        if (x <= lo || x >= hi) continue;
        const double fbar = 1.0 - X->cdf(x);
        if (fbar <= 0.0) break;
        const double ratio = (1.0 - Y->cdf(x)) / fbar;
        if (prev != -kInf && prev - ratio > worst) {
            worst = prev - ratio;
            at = x;
        }
        prev = ratio;
    }
    return make_verdict(StochasticOrder::hr, worst, at);
}

// Composition x -> G^-1(F(x)) on the interior of S_X.
double g_inv_f(const Distribution& X, const Distribution& Y, double x) {
    double u = X.cdf(x);
    u = std::clamp(u, 1e-14, 1.0 - 1e-14);
    return Y.quantile(u);
}

OrderVerdict check_disp(const DistPtr& X, const DistPtr& Y, int n) {
    double worst = -kInf, at = 0.0, prev = -kInf, prev_x = 0.0;
    for (double x : quantile_grid(*X, n)) {
        const double d = g_inv_f(*X, *Y, x) - x;
        if (prev != -kInf && prev - d > worst) {
            worst = prev - d;
            at = prev_x;
        }
        prev = d;
        prev_x = x;
    }
    return make_verdict(StochasticOrder::disp, worst, at);
}

OrderVerdict check_convex_transform(const DistPtr& X, const DistPtr& Y, int n) {
    const std::vector<double> xs = uniform_grid(*X, n);
    std::vector<double> h(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) h[j] = g_inv_f(*X, *Y, xs[j]);
    double worst = -kInf, at = 0.0;
    for (size_t j = 1; j + 1 < h.size(); ++j) {
        const double v = -(h[j - 1] - 2.0 * h[j] + h[j + 1]);
        if (v > worst) {
            worst = v;
            at = xs[j];
        }
    }
    return make_verdict(StochasticOrder::convex_transform, worst, at);
}

OrderVerdict check_star(const DistPtr& X, const DistPtr& Y, int n) {
    double worst = -kInf, at = 0.0, prev = -kInf;
    for (double x : quantile_grid(*X, n)) {
        if (x <= 0.0) continue;
        const double r = g_inv_f(*X, *Y, x) / x;
        if (prev != -kInf && prev - r > worst) {
            worst = prev - r;
            at = x;
        }
        prev = r;
    }
    return make_verdict(StochasticOrder::star, worst, at);
}

OrderVerdict check_superadditive(const DistPtr& X, const DistPtr& Y, int n) {
    const int m = std::min(n, 128);
    const std::vector<double> xs = uniform_grid(*X, m);
    double worst = -kInf, at = 0.0;
    for (size_t j = 0; j < xs.size(); ++j)
        for (size_t k = j; k < xs.size(); ++k) {
            const double sum = xs[j] + xs[k];
            // Keep sums inside the trimmed grid window; beyond it the
            // quantile/cdf round trip loses the tail digits.
            if (sum > xs.back()) break;
            const double v =
                g_inv_f(*X, *Y, xs[j]) + g_inv_f(*X, *Y, xs[k]) - g_inv_f(*X, *Y, sum);
            if (v > worst) {
                worst = v;
                at = xs[j];
            }
        }
    return make_verdict(StochasticOrder::superadditive, worst, at);
}

}  // namespace

std::string order_name(StochasticOrder o) {
    switch (o) {
        case StochasticOrder::st: return "st";
        case StochasticOrder::lr: return "lr";
        case StochasticOrder::hr: return "hr";
        case StochasticOrder::disp: return "disp";
        case StochasticOrder::convex_transform: return "convex-transform";
        case StochasticOrder::star: return "star";
        case StochasticOrder::superadditive: return "superadditive";
        case StochasticOrder::irfr: return "irfr";
    }
    return "?";
}

OrderVerdict check_order(StochasticOrder kind, const DistPtr& X, const DistPtr& Y,
                         int grid_size) {
    require_grid(grid_size);
    switch (kind) {
        case StochasticOrder::st: return check_st(X, Y, grid_size);
        case StochasticOrder::lr: return check_lr(X, Y, grid_size);
        case StochasticOrder::hr: return check_hr(X, Y, grid_size);
        case StochasticOrder::disp: return check_disp(X, Y, grid_size);
        case StochasticOrder::convex_transform: return check_convex_transform(X, Y, grid_size);
        case StochasticOrder::star: return check_star(X, Y, grid_size);
        case StochasticOrder::superadditive: return check_superadditive(X, Y, grid_size);
        case StochasticOrder::irfr: return check_irfr(X, grid_size);
    }
    throw InvalidParameter("unknown order kind");
}

OrderVerdict check_irfr(const DistPtr& X, int grid_size) {
    require_grid(grid_size);
    const std::vector<double> xs = uniform_grid(*X, grid_size);
    std::vector<double> lf(xs.size());
    for (size_t j = 0; j < xs.size(); ++j) {
        const double F = X->cdf(xs[j]);
        if (F <= 0.0) throw DomainError("IRFR grid touches F = 0");
        lf[j] = std::log(F);
    }
    double worst = -kInf, at = 0.0;
    for (size_t j = 1; j + 1 < lf.size(); ++j) {
        const double v = -(lf[j - 1] - 2.0 * lf[j] + lf[j + 1]);  // require convexity
        if (v > worst) {
            worst = v;
            at = xs[j];
        }
    }
    return make_verdict(StochasticOrder::irfr, worst, at);
}

OrderVerdict check_quantile_density_domination(const DistPtr& X, const DistPtr& Y,
                                               int grid_size) {
    require_grid(grid_size);
    double worst = -kInf, at = 0.0;
    for (int j = 0; j < grid_size; ++j) {
        const double u = (j + 0.5) / grid_size;
        const double v = Y->pdf(Y->quantile(u)) - X->pdf(X->quantile(u));
        if (v > worst) {
            worst = v;
            at = u;
        }
    }
    return make_verdict(StochasticOrder::disp, worst, at);
}

DeltaCriterionResult delta_criterion(const DistPtr& X, const DistPtr& Y,
                                     const WeightFunction& w1, const WeightFunction& w2,
                                     int n, int grid_size, double tol) {
    require_grid(grid_size);
    if (n < 1) throw InvalidParameter("delta criterion requires n >= 1");

    LambdaProfile lx(X, w1), ly(Y, w2);
    DeltaCriterionResult out;
    DeltaPartition& part = out.partition;
    part.grid.resize(grid_size);
    part.delta.resize(grid_size);
    for (int j = 0; j < grid_size; ++j) {
        const double u = (j + 0.5) / grid_size;
        part.grid[j] = u;
        part.delta[j] = lx(u) - ly(u);
        if (part.delta[j] > kDeadBand)
            part.a1.push_back(j);
        else if (part.delta[j] < -kDeadBand)
            part.a2.push_back(j);
    }

    bool kernel_condition = true;
    part.inf_phi_on_a1.resize(n);
    part.sup_phi_on_a2.resize(n);
    for (int i = 1; i <= n; ++i) {
        const BetaOrderKernel kernel = BetaOrderKernel::rss_factor(i, n);
        double inf1 = kInf, sup2 = -kInf;
        for (int j : part.a1) inf1 = std::min(inf1, kernel.pdf(part.grid[j]));
        for (int j : part.a2) sup2 = std::max(sup2, kernel.pdf(part.grid[j]));
        part.inf_phi_on_a1[i - 1] = inf1;
        part.sup_phi_on_a2[i - 1] = sup2;
        if (!(inf1 >= sup2)) kernel_condition = false;
    }

    const ExtropyValue jx = general_weighted_extropy(X, w1, tol);
    const ExtropyValue jy = general_weighted_extropy(Y, w2, tol);
    const bool extropy_condition =
        jx.value <= jy.value + jx.error_estimate + jy.error_estimate + kDeadBand;
    out.hypothesis_holds = kernel_condition && extropy_condition;

    const ExtropyValue rx = rss_extropy(X, w1, n, tol);
    const ExtropyValue ry = rss_extropy(Y, w2, n, tol);
    out.conclusion_holds = rx.value <= ry.value + 1e-8;

    if (out.hypothesis_holds && !out.conclusion_holds)
        throw TheoremViolation("delta criterion hypothesis holds but RSS extropies are out of "
                               "order: " +
                               std::to_string(rx.value) + " > " + std::to_string(ry.value));
    return out;
}

}  // namespace xtropy
