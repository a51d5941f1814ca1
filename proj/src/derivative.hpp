#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "function_spec.hpp"

namespace stringspec {

enum class Endpoint { left, right };

/// Finite-difference weights for the d-th derivative at x0 from arbitrary
/// nodes (Fornberg's recurrence), long double.
std::vector<long double> fd_weights(int order, std::span<const long double> nodes, long double x0);

struct DerivativeEstimate {
    double value = 0.0;
    /// Estimated absolute uncertainty of `value` (tightest consistent tableau
    /// candidate; indicative within ~2 orders of magnitude).
    double error = 0.0;
    /// |difference of the last two raw stencil estimates|. Divergent limits
    /// show up here even when the extrapolated tail looks self-consistent.
    double spread = 0.0;
    bool reliable(double tol) const { return spread <= tol * (1.0 + std::fabs(value)); }
};

/// One-sided derivative estimate at x0, looking into the interior along
/// `direction` (+1 right, -1 left). `span` is the length of the smooth piece
/// on that side; stencil points stay within 0.6*span of x0. Orders 0..4.
///
/// Richardson-extrapolates 10-point one-sided stencils over three nested step
/// sizes and returns the tableau entry with the smallest estimated error.
DerivativeEstimate one_sided_estimate(const std::function<long double(long double)>& f,
                                      double x0, int direction, int order, double span);

/// Spec operation: f^{(i)} at an endpoint of f's domain, from inside.
/// Throws UnreliableEstimate when the extrapolation ladder does not settle
/// within `tol_rel` of the value (plus a small absolute floor).
double one_sided_derivative(const FunctionSpec& f, Endpoint e, int order,
                            double tol_rel = 1e-3);

DerivativeEstimate one_sided_derivative_estimate(const FunctionSpec& f, Endpoint e, int order);

/// Central differences in the interior, offset stencils of matching accuracy
/// (order >= 2) at the ends. Input must be sampled on a uniform grid.
FunctionSpec fd_derivative(const FunctionSpec& f, int order);

} // namespace stringspec
