#include "xtropy/weights.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace xtropy {

namespace {

constexpr double kSlack = 1e-12;

bool is_positive_integer(double m) { return m > 0.0 && m == std::floor(m); }

std::string power_name(double m) {
    std::ostringstream os;
    os << "pow:" << m;
    return os.str();
}

}  // namespace

WeightFunction::WeightFunction(WeightKind kind, double m, std::function<double(double)> fn,
                               WeightFlags flags, std::string name)
    : kind_(kind), m_(m), fn_(std::move(fn)), flags_(flags), name_(std::move(name)) {}

WeightFunction WeightFunction::unit() {
    return WeightFunction(WeightKind::unit, 0.0, nullptr,
                          WeightFlags{true, false, true}, "unit");
}

WeightFunction WeightFunction::power(double m) {
    if (!(m > 0.0) || !std::isfinite(m)) throw InvalidParameter("power weight requires m > 0");
    const bool integer = is_positive_integer(m);
    const bool odd = integer && (static_cast<long>(m) % 2 == 1);
    // Nonnegativity is declared for the usual x >= 0 usage; on supports
    // reaching below zero the grid validation will reject the flag.
    return WeightFunction(WeightKind::power, m, nullptr, WeightFlags{true, odd, true},
                          power_name(m));
}

WeightFunction WeightFunction::exponential() {
    return WeightFunction(WeightKind::exponential, 0.0, nullptr,
                          WeightFlags{true, false, true}, "exp");
}

WeightFunction WeightFunction::custom(std::function<double(double)> fn, WeightFlags flags,
                                      std::string name) {
    if (!fn) throw InvalidParameter("custom weight requires a callable");
    return WeightFunction(WeightKind::custom, 0.0, std::move(fn), flags, std::move(name));
}

double WeightFunction::operator()(double x) const {
    switch (kind_) {
        case WeightKind::unit:
            return 1.0;
        case WeightKind::power:
            if (x >= 0.0) return std::pow(x, m_);
            if (!is_positive_integer(m_))
                throw DomainError("power weight with non-integer exponent at x < 0");
            return std::pow(x, m_);  // exact for integer exponents
        case WeightKind::exponential:
            return std::exp(x);
        case WeightKind::custom:
            return fn_(x);
    }
    return 0.0;  // unreachable
}

bool dominates(const WeightFunction& w1, const WeightFunction& w2,
               std::span<const double> grid) {
    for (double x : grid)
        if (w1(x) < w2(x) - kSlack) return false;
    return true;
}

Monotonicity monotone_direction(const WeightFunction& w, std::span<const double> grid) {
    bool up = true, down = true;
    for (size_t k = 1; k < grid.size(); ++k) {
        const double d = w(grid[k]) - w(grid[k - 1]);
        if (d < -kSlack) up = false;
        if (d > kSlack) down = false;
    }
    if (up && down) return Monotonicity::constant;
    if (up) return Monotonicity::increasing;
    if (down) return Monotonicity::decreasing;
    return Monotonicity::none;
}

bool validate_flags_on_grid(const WeightFunction& w, std::span<const double> grid,
                            std::string* why) {
    const WeightFlags& f = w.flags();
    if (f.is_increasing) {
        const Monotonicity dir = monotone_direction(w, grid);
        if (dir != Monotonicity::increasing && dir != Monotonicity::constant) {
            if (why) *why = "declared increasing but first differences go down";
            return false;
        }
    }
    if (f.is_odd) {
        for (double x : grid) {
            if (std::abs(w(-x) + w(x)) > 1e-9 * std::max(1.0, std::abs(w(x)))) {
                if (why) *why = "declared odd but w(-x) != -w(x) at x = " + std::to_string(x);
                return false;
            }
        }
    }
    if (f.is_nonnegative_on_support) {
        for (double x : grid) {
            if (w(x) < -kSlack) {
                if (why) *why = "declared nonnegative but w < 0 at x = " + std::to_string(x);
                return false;
            }
        }
    }
    return true;
}

std::vector<double> default_weight_grid(const Distribution& dist, int points) {
    if (points < 2) throw InvalidParameter("weight grid needs at least 2 points");
    std::vector<double> grid;
    grid.reserve(points);
    const Support s = dist.support();
    if (s.bounded_below() && s.bounded_above()) {
        for (int k = 0; k < points; ++k)
            grid.push_back(s.lower + (s.upper - s.lower) * (k + 0.5) / points);
    } else {
        for (int k = 0; k < points; ++k) grid.push_back(dist.quantile((k + 0.5) / points));
    }
    return grid;
}

WeightFunction parse_weight(const std::string& spec) {
    if (spec == "unit") return WeightFunction::unit();
    if (spec == "exp") return WeightFunction::exponential();
    if (spec.rfind("pow:", 0) == 0) {
        const std::string body = spec.substr(4);
        char* end = nullptr;
        const double m = std::strtod(body.c_str(), &end);
        if (end == body.c_str() || *end != '\0')
            throw ParseError("not a number: '" + body + "'", body);
        return WeightFunction::power(m);
    }
    throw ParseError("unknown weight spec '" + spec + "'", spec);
}

}  // namespace xtropy
