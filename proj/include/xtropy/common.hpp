#pragma once

#include <stdexcept>
#include <string>

namespace xtropy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A distribution or weight was constructed with out-of-range parameters.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// An evaluation was requested outside an operation's domain
/// (quantile at u outside (0,1), reverse hazard where F = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A CLI spec string could not be parsed; `token` names the offender.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string offending_token)
        : Error(message), token(std::move(offending_token)) {}
    std::string token;
};

/// Adaptive quadrature exhausted its subdivision budget. Carries the best
/// estimate obtained so far.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double best, double err)
        : Error(message), best_value(best), error_estimate(err) {}
    double best_value;
    double error_estimate;
};

/// The integral (or one factor of a product formula) diverges.
/// `factor_index` is the 1-based order-statistic index when the divergence
/// arose inside a product formula, -1 otherwise.
class DivergenceError : public ConvergenceError {
public:
    DivergenceError(const std::string& message, double best = 0.0, double err = 0.0,
                    int factor = -1)
        : ConvergenceError(message, best, err), factor_index(factor) {}
    int factor_index;
};

/// Raised when a hypothesis-satisfying case contradicts a theorem's
/// conclusion beyond numeric slack. Seeing one of these is a bug somewhere.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// Worker count for parallel sections: min(hardware, XTROPY_THREADS).
int worker_count();

}  // namespace xtropy
