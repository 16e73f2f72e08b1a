#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "xtropy/common.hpp"
#include "xtropy/distributions.hpp"

namespace xtropy {

enum class WeightKind { unit, power, exponential, custom };

/// Structural properties the theorems condition on. Flags are declared,
/// then validated on a grid (validate_flags_on_grid) rather than proven.
struct WeightFlags {
    bool is_increasing = false;
    bool is_odd = false;
    bool is_nonnegative_on_support = true;
};

/// Nonnegative (or, for the symmetry characterization, odd) weight w1.
class WeightFunction {
public:
    static WeightFunction unit();
    static WeightFunction power(double m);  // w(x) = x^m
    static WeightFunction exponential();    // w(x) = e^x
    static WeightFunction custom(std::function<double(double)> fn, WeightFlags flags,
                                 std::string name);

    /// Evaluate w(x). Power with non-integer m throws DomainError at x < 0;
    /// integer m extends over the whole line.
    double operator()(double x) const;

    WeightKind kind() const { return kind_; }
    double exponent() const { return m_; }
    const WeightFlags& flags() const { return flags_; }
    std::string spec() const { return name_; }

private:
    WeightFunction(WeightKind kind, double m, std::function<double(double)> fn,
                   WeightFlags flags, std::string name);

    WeightKind kind_;
    double m_;
    std::function<double(double)> fn_;
    WeightFlags flags_;
    std::string name_;
};

/// w1(x) >= w2(x) at every grid point (within 1e-12 slack).
bool dominates(const WeightFunction& w1, const WeightFunction& w2,
               std::span<const double> grid);

enum class Monotonicity { increasing, decreasing, constant, none };

/// Direction of w by first differences on the grid.
Monotonicity monotone_direction(const WeightFunction& w, std::span<const double> grid);

/// Check each declared flag on the grid; returns false (and fills `why`)
/// when a declared flag is contradicted by the evaluations.
bool validate_flags_on_grid(const WeightFunction& w, std::span<const double> grid,
                            std::string* why = nullptr);

/// Default evaluation grid: 512 equally spaced interior points of the
/// support (quantiles at equally spaced u for unbounded supports).
std::vector<double> default_weight_grid(const Distribution& dist, int points = 512);

/// Parse the CLI grammar: `unit`, `pow:m`, `exp`.
WeightFunction parse_weight(const std::string& spec);

}  // namespace xtropy
