#pragma once

#include <stdexcept>
#include <string>

namespace fxmpc {

/// Result of a fixed-point operation fell outside the representable range.
/// Overflow is always signaled; values never wrap around silently.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Pitch angle reached the Euler-angle kinematic singularity guard.
class GimbalLockError : public std::runtime_error {
public:
    explicit GimbalLockError(const std::string& what) : std::runtime_error(what) {}
};

/// Physically or structurally invalid parameters (inertias, formats, weights).
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative procedure (Riccati recursion, power iteration) failed to
/// converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent matrix/vector shapes.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed-loop simulation left the valid state region (gimbal lock or
/// unbounded state).
class SimDiverged : public std::runtime_error {
public:
    explicit SimDiverged(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-point overflow in a run configured to abort on overflow.
class OverflowAbort : public std::runtime_error {
public:
    explicit OverflowAbort(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fxmpc
