#include "xtropy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace xtropy {

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half; node 7 is zero).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b;
    double value;
    double error;

    bool operator<(const Segment& o) const { return error < o.error; }
};

// One GK15 panel. Throws DivergenceError on a non-finite evaluation.
Segment evaluate_panel(const std::function<double(double)>& f, double a, double b,
                       long& evaluations) {
    const double center = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);

    const double fc = f(center);
    ++evaluations;
    if (!std::isfinite(fc))
        throw DivergenceError("integrand not finite at x = " + std::to_string(center));

    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double fv1[7], fv2[7];
    // Open rule: at extreme subdivision depth the outermost node can round
    // onto an endpoint; keep evaluations strictly interior.
    const double lo = std::nextafter(a, b), hi = std::nextafter(b, a);
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        fv1[j] = f(std::max(center - dx, lo));
        fv2[j] = f(std::min(center + dx, hi));
        evaluations += 2;
        if (!std::isfinite(fv1[j]) || !std::isfinite(fv2[j]))
            throw DivergenceError("integrand not finite near x = " + std::to_string(center));
        const double fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(hl);
    resabs *= std::abs(hl);

    double abserr = std::abs((resk - resg) * hl);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        abserr = std::max(50.0 * eps * resabs, abserr);

    return Segment{a, b, resk * hl, abserr};
}

constexpr int kMaxIntervals = 10000;

QuadratureResult integrate_finite(const std::function<double(double)>& f, double a,
                                  double b, double tol) {
    long evaluations = 0;
    std::priority_queue<Segment> queue;
    queue.push(evaluate_panel(f, a, b, evaluations));
    double total_value = queue.top().value;
    double total_error = queue.top().error;
    const double eps = std::numeric_limits<double>::epsilon();

    // Panels too narrow to bisect are frozen; their error is irreducible.
    std::vector<Segment> frozen;
    double frozen_error = 0.0;

    int intervals = 1;
    bool stuck = false;
    while (total_error > tol && intervals < kMaxIntervals && !queue.empty()) {
        Segment worst = queue.top();
        // Splittability is relative to the panel's own position: panels
        // hugging zero keep full double resolution.
        const double min_width =
            32.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b)) + 1e-300;
        if (worst.b - worst.a < min_width) {
            queue.pop();
            frozen.push_back(worst);
            frozen_error += worst.error;
            if (frozen_error > tol) {
                stuck = true;
                break;
            }
            continue;
        }
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate_panel(f, worst.a, mid, evaluations);
        Segment right = evaluate_panel(f, mid, worst.b, evaluations);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++intervals;
    }

    if (total_error > tol) {
        if (!std::isfinite(total_value) || total_error > std::max(1e3 * tol, 1e-6)) {
            throw DivergenceError("integral appears divergent: refinement stalled with error " +
                                      std::to_string(total_error),
                                  total_value, total_error);
        }
        throw ConvergenceError(std::string(stuck ? "refinement stalled" : "budget exhausted") +
                                   " at error " + std::to_string(total_error),
                               total_value, total_error);
    }

    // Deterministic final summation in interval order.
    std::vector<Segment> segments = std::move(frozen);
    segments.reserve(segments.size() + queue.size());
    while (!queue.empty()) {
        segments.push_back(queue.top());
        queue.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double value = 0.0, error = 0.0;
    for (const Segment& s : segments) {
        value += s.value;
        error += s.error;
    }
    return QuadratureResult{value, error, evaluations};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lower,
                           double upper, double tol) {
    if (!(tol > 0.0)) throw InvalidParameter("integration tolerance must be positive");
    if (!(lower < upper)) throw InvalidParameter("integration bounds must satisfy lower < upper");

    const bool lo_inf = std::isinf(lower);
    const bool hi_inf = std::isinf(upper);

    if (!lo_inf && !hi_inf) return integrate_finite(f, lower, upper, tol);

    if (lo_inf && hi_inf) {
        QuadratureResult neg = integrate(f, lower, 0.0, tol / 2);
        QuadratureResult pos = integrate(f, 0.0, upper, tol / 2);
        return QuadratureResult{neg.value + pos.value,
                                neg.abs_error_estimate + pos.abs_error_estimate,
                                neg.evaluations + pos.evaluations};
    }

    if (hi_inf) {
        // x = lower + (t/(1-t))^2, dx = 2t/(1-t)^3 dt. The squared rational
        // map also flattens algebraic singularities at the finite endpoint
        // (a 1/sqrt(x-a) blowup becomes bounded).
        const double a = lower;
        auto g = [&f, a](double t) {
            const double om = 1.0 - t;
            const double r = t / om;
            return f(a + r * r) * 2.0 * r / (om * om);
        };
        return integrate_finite(g, 0.0, 1.0, tol);
    }

    // x = upper - (t/(1-t))^2; integral orientation folds the sign in.
    const double b = upper;
    auto g = [&f, b](double t) {
        const double om = 1.0 - t;
        const double r = t / om;
        return f(b - r * r) * 2.0 * r / (om * om);
    };
    return integrate_finite(g, 0.0, 1.0, tol);
}

BetaOrderKernel::BetaOrderKernel(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 1) throw InvalidParameter("beta kernel parameters must be >= 1");
}

double BetaOrderKernel::log_norm() const {
    return std::lgamma(static_cast<double>(a + b)) - std::lgamma(static_cast<double>(a)) -
           std::lgamma(static_cast<double>(b));
}

double BetaOrderKernel::pdf(double u) const {
    if (u <= 0.0) return (a == 1 && u == 0.0) ? std::exp(log_norm()) : 0.0;
    if (u >= 1.0) return (b == 1 && u == 1.0) ? std::exp(log_norm()) : 0.0;
    double lp = log_norm();
    if (a != 1) lp += (a - 1) * std::log(u);
    if (b != 1) lp += (b - 1) * std::log1p(-u);
    return std::exp(lp);
}

double BetaOrderKernel::mean() const {
    return static_cast<double>(a) / static_cast<double>(a + b);
}

QuadratureResult beta_expectation(const std::function<double(double)>& g,
                                  const BetaOrderKernel& kernel, double tol) {
    auto integrand = [&g, &kernel](double u) { return g(u) * kernel.pdf(u); };
    return integrate(integrand, 0.0, 1.0, tol);
}

double log_factorial(long n) {
    if (n < 0) throw InvalidParameter("factorial of a negative integer");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_choose(long n, long k) {
    if (k < 0 || k > n) throw InvalidParameter("binomial coefficient out of range");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_double_factorial_odd(long n) {
    if (n < 0) throw InvalidParameter("double factorial of a negative index");
    // (2n-1)!! = (2n)! / (2^n n!)
    return log_factorial(2 * n) - static_cast<double>(n) * std::log(2.0) - log_factorial(n);
}

}  // namespace xtropy
