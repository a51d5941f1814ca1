#include "wave.hpp"

#include <cmath>

#include "errors.hpp"
#include "numeric.hpp"
#include "quadrature.hpp"

namespace stringspec {

double WaveParams::speed() const { return std::sqrt(tension / density); }

void WaveParams::validate() const {
    if (!(tension > 0.0) || !(density > 0.0) || !(length > 0.0))
        throw PreconditionError("wave parameters must be positive");
}

double ModalAmplitudes::omega(int m) const {
    return M_PI * static_cast<double>(m) * params.speed() / params.length;
}

ModalAmplitudes solve(const FunctionSpec& f0, const FunctionSpec& g0, const WaveParams& params,
                      int truncation, double rel_tol) {
    params.validate();
    if (truncation < 1) throw PreconditionError("solve: truncation M >= 1");
    Interval dom = f0.domain();
    if (dom.left != 0.0 || dom.right != params.length)
        throw PreconditionError("solve: f0 must live on [0, L]");
    if (g0.domain().left != 0.0 || g0.domain().right != params.length)
        throw PreconditionError("solve: g0 must live on [0, L]");
    double scale0 = 0.0, scale1 = 0.0;
    for (int i = 0; i <= 64; ++i) {
        double x = params.length * i / 64.0;
        scale0 = std::max(scale0, std::fabs(f0(x)));
        scale1 = std::max(scale1, std::fabs(g0(x)));
    }
    if (std::fabs(f0(0.0)) > 1e-9 * (1 + scale0) || std::fabs(f0(params.length)) > 1e-9 * (1 + scale0))
        throw PreconditionError("solve: f0 must vanish at both ends");
    if (std::fabs(g0(0.0)) > 1e-9 * (1 + scale1) || std::fabs(g0(params.length)) > 1e-9 * (1 + scale1))
        throw PreconditionError("solve: g0 must vanish at both ends");

    ModalAmplitudes sol;
    sol.params = params;
    sol.cos_amp.resize(static_cast<std::size_t>(truncation));
    sol.sin_amp.resize(static_cast<std::size_t>(truncation));
    for (int m = 1; m <= truncation; ++m) {
        sol.cos_amp[static_cast<std::size_t>(m - 1)] = sine_coefficient(f0, m, rel_tol);
        sol.sin_amp[static_cast<std::size_t>(m - 1)] = sine_coefficient(g0, m, rel_tol) / sol.omega(m);
    }
    return sol;
}

namespace {

// Phases in pi units keep sin exactly zero at x in {0, L} and make the modal
// period 2L/c exact up to one rounding of the phase.
inline double mode_time_factor(const ModalAmplitudes& sol, int m, double t, bool derivative) {
    double phase = static_cast<double>(m) * sol.params.speed() * t / sol.params.length;
    std::size_t i = static_cast<std::size_t>(m - 1);
    if (!derivative) return sol.cos_amp[i] * cos_pi(phase) + sol.sin_amp[i] * sin_pi(phase);
    return sol.omega(m) * (-sol.cos_amp[i] * sin_pi(phase) + sol.sin_amp[i] * cos_pi(phase));
}

} // namespace

double evaluate(const ModalAmplitudes& sol, double x, double t) {
    const double L = sol.params.length;
    if (x < 0.0 || x > L) throw PreconditionError("evaluate: x must be in [0, L]");
    CompensatedSum<double> acc;
    for (int m = 1; m <= sol.truncation(); ++m)
        acc.add(mode_time_factor(sol, m, t, false) * sin_pi(static_cast<double>(m) * x / L));
    return acc.value();
}

double evaluate_xx(const ModalAmplitudes& sol, double x, double t) {
    const double L = sol.params.length;
    CompensatedSum<double> acc;
    for (int m = 1; m <= sol.truncation(); ++m) {
        double k = M_PI * static_cast<double>(m) / L;
        acc.add(-k * k * mode_time_factor(sol, m, t, false) *
                sin_pi(static_cast<double>(m) * x / L));
    }
    return acc.value();
}

namespace {

// Odd 2L-periodic extension value of f0 at arbitrary y.
double odd_periodic(const FunctionSpec& f0, double L, double y) {
    double r = y - 2.0 * L * std::nearbyint(y / (2.0 * L)); // r in [-L, L]
    if (r >= 0.0) return f0(std::min(r, L));
    return -f0(std::min(-r, L));
}

// Integral over [0, y] of the odd 2L-periodic extension of g0; even periodic
// in y, so only the reduced magnitude matters.
double velocity_integral_to(const FunctionSpec& g0, double L, double y, double rel_tol) {
    double r = std::fabs(y - 2.0 * L * std::nearbyint(y / (2.0 * L)));
    if (r == 0.0) return 0.0;
    return integrate_checked([&g0](double s) { return g0(s); }, 0.0, std::min(r, L), rel_tol, 8);
}

} // namespace

double dalembert_oracle(const FunctionSpec& f0, const FunctionSpec& g0, const WaveParams& params,
                        double x, double t, double rel_tol) {
    params.validate();
    const double L = params.length;
    const double c = params.speed();
    double traveling = 0.5 * (odd_periodic(f0, L, x - c * t) + odd_periodic(f0, L, x + c * t));
    double vel = (velocity_integral_to(g0, L, x + c * t, rel_tol) -
                  velocity_integral_to(g0, L, x - c * t, rel_tol)) /
                 (2.0 * c);
    return traveling + vel;
}

double residual_of(const std::function<double(double, double)>& field, const WaveParams& params,
                   const ResidualMesh& mesh, double h) {
    params.validate();
    if (mesh.nx < 2 || mesh.nt < 2) throw PreconditionError("residual: mesh needs >= 2x2 points");
    if (!(h > 0.0)) throw PreconditionError("residual: step h must be positive");
    const double L = params.length;
    if (2.0 * h >= L) throw PreconditionError("residual: step too large for the interior mesh");
    const double c2 = params.tension / params.density;
    double worst = 0.0;
    for (std::size_t i = 0; i < mesh.nx; ++i) {
        double x = h + (L - 2.0 * h) * static_cast<double>(i) / static_cast<double>(mesh.nx - 1);
        for (std::size_t j = 0; j < mesh.nt; ++j) {
            double t = mesh.t0 + (mesh.t1 - mesh.t0) * static_cast<double>(j) /
                                     static_cast<double>(mesh.nt - 1);
            double ftt = (field(x, t + h) - 2.0 * field(x, t) + field(x, t - h)) / (h * h);
            double fxx = (field(x + h, t) - 2.0 * field(x, t) + field(x - h, t)) / (h * h);
            worst = std::max(worst, std::fabs(ftt - c2 * fxx));
        }
    }
    return worst;
}

double residual(const ModalAmplitudes& sol, const ResidualMesh& mesh, double h) {
    return residual_of([&sol](double x, double t) { return evaluate(sol, x, t); }, sol.params,
                       mesh, h);
}

std::vector<TracePoint> endpoint_curvature_limit(const ModalAmplitudes& sol, double t,
                                                 std::span<const double> eps_list) {
    const double L = sol.params.length;
    std::vector<TracePoint> trace;
    trace.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (!(eps > 0.0) || eps >= L)
            throw PreconditionError("endpoint trace: eps must lie in (0, L)");
        TracePoint p;
        p.eps = eps;
        p.near_left = evaluate_xx(sol, eps, t);
        p.near_right = evaluate_xx(sol, L - eps, t);
        trace.push_back(p);
    }
    return trace;
}

double energy(const ModalAmplitudes& sol, double t) {
    const double L = sol.params.length;
    const double mu = sol.params.density;
    CompensatedSum<double> acc;
    for (int m = 1; m <= sol.truncation(); ++m) {
        double f = mode_time_factor(sol, m, t, false);
        double fp = mode_time_factor(sol, m, t, true);
        double w = sol.omega(m);
        acc.add(mu * (fp * fp + w * w * f * f));
    }
    return acc.value() * L / 4.0;
}

} // namespace stringspec
