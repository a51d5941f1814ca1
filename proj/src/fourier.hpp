#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "extend.hpp"
#include "function_spec.hpp"

namespace stringspec {

/// Default relative tolerance driven into the coefficient quadratures.
inline constexpr double kCoeffTol = 1e-13;

/// c_m = (1/2L) \int_{-L}^{L} h(x) e^{-i pi x m / L} dx. The integral is split
/// at x = 0 so extension seams never sit inside a Simpson panel, and the panel
/// count starts at 8|m| to resolve the oscillation.
std::complex<double> complex_coefficient(const FunctionSpec& h, int m, double rel_tol = kCoeffTol);

/// b_m = (2/L) \int_0^L f(x) sin(pi m x / L) dx, m >= 1. Equals -2 e_m in the
/// half-range complex normalization (see complex_coefficient).
double sine_coefficient(const FunctionSpec& f, int m, double rel_tol = kCoeffTol);

/// Coefficient bound C / m^n with C = L^{n-1} ||h^{(n)}||_{L1(-L,L)} / (2 pi^n).
/// The constant bounds the half-range coefficient magnitude |b_m| / 2.
struct DecayBound {
    int order = 0;
    double constant = 0.0;
    /// False when the requested order exceeds the seam-verified smoothness:
    /// the bound is then an unverified hypothesis.
    bool hypothesis_verified = false;
    double bound(int m) const;
};

/// L1 norm of the n-th derivative measured by grid finite differences at 4097
/// points. `verified_class` is the seam-verified smoothness of h (pass the
/// extension's min seam class; negative = unknown).
DecayBound decay_bound(const FunctionSpec& h, int n, int verified_class = -1);
DecayBound decay_bound(const ExtensionResult& ext, int n);

/// Guaranteed sup-norm remainder of the sine series past mode M, from the
/// decay bound of f's odd extension at its seam-verified order k:
/// sum_{m>M} C/m^k <= C M^{1-k}/(k-1). No finite guarantee exists for k < 2.
struct TailBound {
    int order = 0;       // k actually used
    double constant = 0; // C
    double value = 0;    // infinity when order < 2
    bool finite = false;
};
TailBound sine_tail_bound(const FunctionSpec& f, int truncation);

/// sum_{m=1..M} coeffs[m-1] sin(pi m x / L), compensated summation.
double partial_sum(std::span<const double> coeffs, int M, double x, double L);

/// sup over a uniform grid (default 1025 points) of |f - partial sum|.
/// A seeded jitter perturbs the interior probe points when `jitter_seed` is
/// set, as a guard against grid-aligned error cancellation.
double uniform_error(const FunctionSpec& f, int M, std::size_t grid_points = 1025,
                     std::optional<std::uint64_t> jitter_seed = std::nullopt,
                     double rel_tol = kCoeffTol);

struct CoefficientRow {
    int mode = 0;
    double value = 0.0;          // b_m
    double bound = 0.0;          // C / m^n
    double measured_ratio = 0.0; // (|b_m|/2) / bound
};

/// Sine coefficients 1..max_mode against a decay bound. Modes are computed
/// independently (in parallel) and assembled by index.
std::vector<CoefficientRow> coefficient_table(const FunctionSpec& f, int max_mode,
                                              const DecayBound& bound, double rel_tol = kCoeffTol);

/// Least-squares slope of log|b_m| against log m over modes in [m_lo, m_hi],
/// ignoring entries below `floor` (quadrature-noise zeros would otherwise
/// dominate the fit).
double decay_slope(std::span<const CoefficientRow> rows, int m_lo, int m_hi, double floor = 1e-12);

} // namespace stringspec
