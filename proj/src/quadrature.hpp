#pragma once

#include <cstddef>
#include <functional>

namespace stringspec {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0; // estimated
    std::size_t panels = 0; // final composite panel count
    bool converged = false;
};

/// Adaptive composite Simpson: panel count doubles until the Richardson error
/// estimate |S_2N - S_N|/15 meets rel_tol * (1 + |value|); the returned value
/// is the extrapolated S_2N + (S_2N - S_N)/15.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-13, std::size_t min_panels = 8,
                           std::size_t max_panels = std::size_t{1} << 22);

/// Same, raising UnreliableEstimate with a refinement trace on non-convergence.
double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-13, std::size_t min_panels = 8);

} // namespace stringspec
