#pragma once

#include <stdexcept>
#include <string>

namespace stringspec {

/// A precondition on the mathematical input failed (endpoint values, domain,
/// smoothness class, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A derivative or quadrature estimate did not converge to the requested
/// tolerance; carries a human-readable diagnostic.
class UnreliableEstimate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear system numerically singular.
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A function evaluation produced a non-finite value.
class NonFiniteValue : public std::runtime_error {
public:
    explicit NonFiniteValue(double x)
        : std::runtime_error("non-finite value at x = " + std::to_string(x)), abscissa(x) {}
    double abscissa;
};

} // namespace stringspec
