#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fourier.hpp"
#include "function_spec.hpp"

namespace stringspec {

struct WaveParams {
    double tension = 1.0; // T
    double density = 1.0; // mu, mass per unit length
    double length = 1.0;  // L
    double speed() const; // c = sqrt(T/mu)
    void validate() const;
};

/// Truncated modal solution: F(x,t) = sum_m [K_m cos(w_m t) + L_m sin(w_m t)]
/// sin(pi m x / L), w_m = pi m c / L.
struct ModalAmplitudes {
    WaveParams params;
    std::vector<double> cos_amp; // K_m at index m-1
    std::vector<double> sin_amp; // L_m at index m-1
    int truncation() const { return static_cast<int>(cos_amp.size()); }
    double omega(int m) const;
};

/// Fits the modal amplitudes to initial displacement f0 and velocity g0 by
/// sine-coefficient orthogonality: K_m = b_m(f0), L_m = b_m(g0) / w_m.
ModalAmplitudes solve(const FunctionSpec& f0, const FunctionSpec& g0, const WaveParams& params,
                      int truncation, double rel_tol = kCoeffTol);

double evaluate(const ModalAmplitudes& sol, double x, double t);

/// Analytic modal curvature F_xx (no finite differences): the endpoint limit
/// would drown in FD noise otherwise.
double evaluate_xx(const ModalAmplitudes& sol, double x, double t);

/// Traveling-wave reference: (h(x-ct) + h(x+ct))/2 + (1/2c) \int ghat over
/// [x-ct, x+ct], with h, ghat the odd 2L-periodic extensions of f0, g0.
/// Independent of the modal path.
double dalembert_oracle(const FunctionSpec& f0, const FunctionSpec& g0, const WaveParams& params,
                        double x, double t, double rel_tol = 1e-12);

struct ResidualMesh {
    std::size_t nx = 33;
    std::size_t nt = 9;
    double t0 = 0.0;
    double t1 = 2.0;
};

/// max |F_tt - (T/mu) F_xx| over the mesh, central differences with step h on
/// the evaluated field. The mesh keeps x in [h, L-h].
double residual(const ModalAmplitudes& sol, const ResidualMesh& mesh, double h);

/// Same residual for an arbitrary field (negative controls).
double residual_of(const std::function<double(double, double)>& field, const WaveParams& params,
                   const ResidualMesh& mesh, double h);

struct TracePoint {
    double eps = 0.0;
    double near_left = 0.0;  // F_xx(eps, t)
    double near_right = 0.0; // F_xx(L-eps, t)
};

/// Modal curvature near both endpoints for each epsilon (descending lists are
/// conventional but not required).
std::vector<TracePoint> endpoint_curvature_limit(const ModalAmplitudes& sol, double t,
                                                 std::span<const double> eps_list);

/// E(t) = (L/4) sum_m mu [f_m'(t)^2 + w_m^2 f_m(t)^2]; evaluated per mode at
/// time t rather than collapsed, so conservation is a real measurement.
double energy(const ModalAmplitudes& sol, double t);

} // namespace stringspec
