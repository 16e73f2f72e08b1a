#include "xtropy/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "xtropy/quadrature.hpp"

namespace xtropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Quantile clamp toward unbounded endpoints.
constexpr double kQuantileEps = 1e-12;

// Shortest decimal string that parses back to exactly x.
std::string format_number(double x) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

void require_unit_interval(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("quantile argument must lie in (0,1), got " + format_number(u));
}

class Uniform final : public Distribution {
public:
    Uniform(double a, double b) : a_(a), b_(b) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw InvalidParameter("uniform requires finite a < b");
    }
    double pdf(double x) const override {
        return (x < a_ || x > b_) ? 0.0 : 1.0 / (b_ - a_);
    }
    double cdf(double x) const override {
        if (x <= a_) return 0.0;
        if (x >= b_) return 1.0;
        return (x - a_) / (b_ - a_);
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        return a_ + u * (b_ - a_);
    }
    Support support() const override { return {a_, b_}; }
    std::string spec() const override {
        return "uniform:" + format_number(a_) + "," + format_number(b_);
    }

private:
    double a_, b_;
};

class Power final : public Distribution {
public:
    explicit Power(double theta) : theta_(theta) {
        if (!(theta > 0.0) || !std::isfinite(theta))
            throw InvalidParameter("power requires theta > 0");
    }
    double pdf(double x) const override {
        if (x < 0.0 || x > 1.0) return 0.0;
        return theta_ * std::pow(x, theta_ - 1.0);
    }
    double cdf(double x) const override {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return std::pow(x, theta_);
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        return std::pow(u, 1.0 / theta_);
    }
    Support support() const override { return {0.0, 1.0}; }
    std::string spec() const override { return "power:" + format_number(theta_); }

private:
    double theta_;
};

class Exponential final : public Distribution {
public:
    explicit Exponential(double lambda) : lambda_(lambda) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw InvalidParameter("exp requires lambda > 0");
    }
    double pdf(double x) const override {
        return x < 0.0 ? 0.0 : lambda_ * std::exp(-lambda_ * x);
    }
    double cdf(double x) const override {
        return x <= 0.0 ? 0.0 : -std::expm1(-lambda_ * x);
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        u = std::min(u, 1.0 - kQuantileEps);
        return -std::log1p(-u) / lambda_;
    }
    Support support() const override { return {0.0, kInf}; }
    std::string spec() const override { return "exp:" + format_number(lambda_); }

private:
    double lambda_;
};

class Pareto final : public Distribution {
public:
    explicit Pareto(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw InvalidParameter("pareto requires alpha > 0");
    }
    double pdf(double x) const override {
        return x < 1.0 ? 0.0 : alpha_ * std::pow(x, -alpha_ - 1.0);
    }
    double cdf(double x) const override {
        return x <= 1.0 ? 0.0 : -std::expm1(-alpha_ * std::log(x));
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        u = std::min(u, 1.0 - kQuantileEps);
        return std::exp(-std::log1p(-u) / alpha_);
    }
    Support support() const override { return {1.0, kInf}; }
    std::string spec() const override { return "pareto:" + format_number(alpha_); }

private:
    double alpha_;
};

class BetaKernelDist final : public Distribution {
public:
    BetaKernelDist(int a, int b) : kernel_(a, b) {}
    double pdf(double x) const override {
        if (x < 0.0 || x > 1.0) return 0.0;
        return kernel_.pdf(x);
    }
    double cdf(double x) const override {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        // P(at least a of a+b-1 uniforms <= x); exact for integer parameters.
        const int N = kernel_.a + kernel_.b - 1;
        double sum = 0.0;
        for (int j = kernel_.a; j <= N; ++j) {
            double lt = log_choose(N, j) + j * std::log(x) + (N - j) * std::log1p(-x);
            sum += std::exp(lt);
        }
        return std::min(sum, 1.0);
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 2e-17; ++it) {
            const double mid = 0.5 * (lo + hi);
            (cdf(mid) < u ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    Support support() const override { return {0.0, 1.0}; }
    std::string spec() const override {
        return "beta:" + std::to_string(kernel_.a) + "," + std::to_string(kernel_.b);
    }

private:
    BetaOrderKernel kernel_;
};

class LinearRising final : public Distribution {
public:
    double pdf(double x) const override { return (x < 0.0 || x > 1.0) ? 0.0 : 2.0 * x; }
    double cdf(double x) const override {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return x * x;
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        return std::sqrt(u);
    }
    Support support() const override { return {0.0, 1.0}; }
    std::string spec() const override { return "linear-rising"; }
};

class LinearFalling final : public Distribution {
public:
    double pdf(double x) const override {
        return (x < 0.0 || x > 1.0) ? 0.0 : 2.0 * (1.0 - x);
    }
    double cdf(double x) const override {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        const double t = 1.0 - x;
        return 1.0 - t * t;
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        return 1.0 - std::sqrt(1.0 - u);
    }
    Support support() const override { return {0.0, 1.0}; }
    std::string spec() const override { return "linear-falling"; }
};

// F(x) = exp(-sqrt(-x)) on (-inf, 0): log F is convex, the IRFR witness.
class NegSqrtExp final : public Distribution {
public:
    double pdf(double x) const override {
        if (x >= 0.0) return x == 0.0 ? kInf : 0.0;
        const double s = std::sqrt(-x);
        return std::exp(-s) / (2.0 * s);
    }
    double cdf(double x) const override {
        if (x >= 0.0) return 1.0;
        return std::exp(-std::sqrt(-x));
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        u = std::max(u, kQuantileEps);
        const double l = std::log(u);
        return -l * l;
    }
    Support support() const override { return {-kInf, 0.0}; }
    std::string spec() const override { return "negsqrtexp"; }
};

class Triangular final : public Distribution {
public:
    Triangular(double a, double b) : a_(a), b_(b) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw InvalidParameter("triangular requires finite a < b");
    }
    double pdf(double x) const override {
        if (x < a_ || x > b_) return 0.0;
        const double w = b_ - a_;
        const double mid = 0.5 * (a_ + b_);
        return x <= mid ? 4.0 * (x - a_) / (w * w) : 4.0 * (b_ - x) / (w * w);
    }
    double cdf(double x) const override {
        if (x <= a_) return 0.0;
        if (x >= b_) return 1.0;
        const double w = b_ - a_;
        const double mid = 0.5 * (a_ + b_);
        if (x <= mid) {
            const double t = (x - a_) / w;
            return 2.0 * t * t;
        }
        const double t = (b_ - x) / w;
        return 1.0 - 2.0 * t * t;
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        const double w = b_ - a_;
        if (u <= 0.5) return a_ + w * std::sqrt(u / 2.0);
        return b_ - w * std::sqrt((1.0 - u) / 2.0);
    }
    Support support() const override { return {a_, b_}; }
    std::string spec() const override {
        return "triangular:" + format_number(a_) + "," + format_number(b_);
    }

private:
    double a_, b_;
};

class Scaled final : public Distribution {
public:
    Scaled(DistPtr base, double c) : base_(std::move(base)), c_(c) {
        if (!base_) throw InvalidParameter("scaled requires a base distribution");
        if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParameter("scaled requires c > 0");
    }
    double pdf(double x) const override { return base_->pdf(x / c_) / c_; }
    double cdf(double x) const override { return base_->cdf(x / c_); }
    double quantile(double u) const override { return c_ * base_->quantile(u); }
    Support support() const override {
        Support s = base_->support();
        return {c_ * s.lower, c_ * s.upper};
    }
    std::string spec() const override {
        return "scaled:" + base_->spec() + ",c=" + format_number(c_);
    }

private:
    DistPtr base_;
    double c_;
};

class Shifted final : public Distribution {
public:
    Shifted(DistPtr base, double d) : base_(std::move(base)), d_(d) {
        if (!base_) throw InvalidParameter("shifted requires a base distribution");
        if (!std::isfinite(d)) throw InvalidParameter("shifted requires a finite offset");
    }
    double pdf(double x) const override { return base_->pdf(x - d_); }
    double cdf(double x) const override { return base_->cdf(x - d_); }
    double quantile(double u) const override { return base_->quantile(u) + d_; }
    Support support() const override {
        Support s = base_->support();
        return {s.lower + d_, s.upper + d_};
    }
    std::string spec() const override {
        return "shifted:" + base_->spec() + ",d=" + format_number(d_);
    }

private:
    DistPtr base_;
    double d_;
};

// Monotone cubic (Fritsch-Carlson) interpolation of a quantile table; the
// pdf falls out as the reciprocal of the quantile density.
class CustomQuantile final : public Distribution {
public:
    CustomQuantile(std::vector<double> u, std::vector<double> x)
        : u_(std::move(u)), x_(std::move(x)) {
        if (u_.size() != x_.size() || u_.size() < 4)
            throw InvalidParameter("custom quantile table needs >= 4 matching (u,x) rows");
        if (u_.front() != 0.0 || u_.back() != 1.0)
            throw InvalidParameter("custom quantile table must span u = 0..1");
        for (size_t k = 1; k < u_.size(); ++k)
            if (!(u_[k] > u_[k - 1]) || !(x_[k] > x_[k - 1]))
                throw InvalidParameter("custom quantile table must be strictly increasing");
        build_tangents();
    }

    double pdf(double x) const override {
        if (x < x_.front() || x > x_.back()) return 0.0;
        const double u = invert(x);
        const double qd = derivative(u);
        return qd > 0.0 ? 1.0 / qd : 0.0;
    }
    double cdf(double x) const override {
        if (x <= x_.front()) return 0.0;
        if (x >= x_.back()) return 1.0;
        return invert(x);
    }
    double quantile(double u) const override {
        require_unit_interval(u);
        return evaluate(u);
    }
    Support support() const override { return {x_.front(), x_.back()}; }
    std::string spec() const override { return "custom:<table>"; }

private:
    void build_tangents() {
        const size_t n = u_.size();
        std::vector<double> d(n - 1);
        for (size_t k = 0; k + 1 < n; ++k) d[k] = (x_[k + 1] - x_[k]) / (u_[k + 1] - u_[k]);
        m_.assign(n, 0.0);
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (size_t k = 1; k + 1 < n; ++k) m_[k] = 0.5 * (d[k - 1] + d[k]);
        for (size_t k = 0; k + 1 < n; ++k) {
            const double alpha = m_[k] / d[k];
            const double beta = m_[k + 1] / d[k];
            const double s = alpha * alpha + beta * beta;
            if (s > 9.0) {
                const double tau = 3.0 / std::sqrt(s);
                m_[k] = tau * alpha * d[k];
                m_[k + 1] = tau * beta * d[k];
            }
        }
    }

    size_t interval(double u) const {
        const auto it = std::upper_bound(u_.begin(), u_.end(), u);
        size_t k = static_cast<size_t>(it - u_.begin());
        if (k == 0) return 0;
        if (k >= u_.size()) return u_.size() - 2;
        return k - 1;
    }

    double evaluate(double u) const {
        const size_t k = interval(u);
        const double h = u_[k + 1] - u_[k];
        const double t = (u - u_[k]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * x_[k] + (t3 - 2 * t2 + t) * h * m_[k] +
               (-2 * t3 + 3 * t2) * x_[k + 1] + (t3 - t2) * h * m_[k + 1];
    }

    double derivative(double u) const {
        const size_t k = interval(u);
        const double h = u_[k + 1] - u_[k];
        const double t = (u - u_[k]) / h;
        const double t2 = t * t;
        return ((6 * t2 - 6 * t) * x_[k] + (3 * t2 - 4 * t + 1) * h * m_[k] +
                (-6 * t2 + 6 * t) * x_[k + 1] + (3 * t2 - 2 * t) * h * m_[k + 1]) /
               h;
    }

    double invert(double x) const {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 2e-17; ++it) {
            const double mid = 0.5 * (lo + hi);
            (evaluate(mid) < x ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    std::vector<double> u_, x_, m_;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

double parse_real(const std::string& token) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        throw ParseError("not a number: '" + token + "'", token);
    return v;
}

int parse_int(const std::string& token) {
    const double v = parse_real(token);
    if (v != std::floor(v)) throw ParseError("not an integer: '" + token + "'", token);
    return static_cast<int>(v);
}

std::vector<double> parse_reals(const std::string& body, size_t expected,
                                const std::string& what) {
    auto parts = split(body, ',');
    if (parts.size() != expected)
        throw ParseError(what + " expects " + std::to_string(expected) + " parameter(s), got '" +
                             body + "'",
                         body);
    std::vector<double> out;
    for (const auto& p : parts) out.push_back(parse_real(p));
    return out;
}

}  // namespace

bool Support::bounded_below() const { return std::isfinite(lower); }
bool Support::bounded_above() const { return std::isfinite(upper); }

double Distribution::reverse_hazard(double x) const {
    const double F = cdf(x);
    if (F <= 0.0)
        throw DomainError("reverse hazard undefined where F(x) = 0 (x = " + format_number(x) +
                          ")");
    return pdf(x) / F;
}

DistPtr make_uniform(double a, double b) { return std::make_shared<Uniform>(a, b); }
DistPtr make_power(double theta) { return std::make_shared<Power>(theta); }
DistPtr make_exponential(double lambda) { return std::make_shared<Exponential>(lambda); }
DistPtr make_pareto(double alpha) { return std::make_shared<Pareto>(alpha); }
DistPtr make_beta_kernel(int a, int b) { return std::make_shared<BetaKernelDist>(a, b); }
DistPtr make_linear_rising() { return std::make_shared<LinearRising>(); }
DistPtr make_linear_falling() { return std::make_shared<LinearFalling>(); }
DistPtr make_neg_sqrt_exp() { return std::make_shared<NegSqrtExp>(); }
DistPtr make_triangular(double a, double b) { return std::make_shared<Triangular>(a, b); }
DistPtr make_scaled(DistPtr base, double c) {
    return std::make_shared<Scaled>(std::move(base), c);
}
DistPtr make_shifted(DistPtr base, double d) {
    return std::make_shared<Shifted>(std::move(base), d);
}
DistPtr make_custom(std::vector<double> u, std::vector<double> x) {
    return std::make_shared<CustomQuantile>(std::move(u), std::move(x));
}

DistPtr parse_distribution(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (family == "uniform") {
        auto p = parse_reals(body, 2, "uniform");
        return make_uniform(p[0], p[1]);
    }
    if (family == "power") return make_power(parse_real(body));
    if (family == "exp") return make_exponential(parse_real(body));
    if (family == "pareto") return make_pareto(parse_real(body));
    if (family == "beta") {
        auto p = split(body, ',');
        if (p.size() != 2) throw ParseError("beta expects a,b, got '" + body + "'", body);
        return make_beta_kernel(parse_int(p[0]), parse_int(p[1]));
    }
    if (family == "triangular") {
        auto p = parse_reals(body, 2, "triangular");
        return make_triangular(p[0], p[1]);
    }
    if (family == "linear-rising") return make_linear_rising();
    if (family == "linear-falling") return make_linear_falling();
    if (family == "negsqrtexp") return make_neg_sqrt_exp();
    if (family == "scaled" || family == "shifted") {
        const std::string tail = family == "scaled" ? ",c=" : ",d=";
        const auto pos = body.rfind(tail);
        if (pos == std::string::npos)
            throw ParseError(family + " spec needs a trailing '" + tail + "<value>'", body);
        DistPtr base = parse_distribution(body.substr(0, pos));
        const double v = parse_real(body.substr(pos + tail.size()));
        return family == "scaled" ? make_scaled(std::move(base), v)
                                  : make_shifted(std::move(base), v);
    }
    if (family == "custom") {
        std::ifstream in(body);
        if (!in) throw ParseError("cannot open custom quantile table '" + body + "'", body);
        nlohmann::json j;
        in >> j;
        return make_custom(j.at("u").get<std::vector<double>>(),
                           j.at("x").get<std::vector<double>>());
    }
    throw ParseError("unknown distribution family '" + family + "'", family);
}

}  // namespace xtropy
