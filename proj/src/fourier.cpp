#include "fourier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "derivative.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "quadrature.hpp"

namespace stringspec {

namespace {

std::size_t mode_panels(int m) { return static_cast<std::size_t>(8) * static_cast<std::size_t>(std::max(1, std::abs(m))); }

} // namespace

std::complex<double> complex_coefficient(const FunctionSpec& h, int m, double rel_tol) {
    Interval dom = h.domain();
    if (dom.left != -dom.right) throw PreconditionError("complex_coefficient expects a domain [-L, L]");
    double L = dom.right;
    std::size_t panels = mode_panels(m);
    auto re = [&h, m, L](double x) { return h(x) * cos_pi(static_cast<double>(m) * x / L); };
    auto im = [&h, m, L](double x) { return -h(x) * sin_pi(static_cast<double>(m) * x / L); };
    // split at the seam so panel boundaries align with the kink
    double real = integrate_checked(re, -L, 0.0, rel_tol, panels) +
                  integrate_checked(re, 0.0, L, rel_tol, panels);
    double imag = integrate_checked(im, -L, 0.0, rel_tol, panels) +
                  integrate_checked(im, 0.0, L, rel_tol, panels);
    return {real / (2.0 * L), imag / (2.0 * L)};
}

double sine_coefficient(const FunctionSpec& f, int m, double rel_tol) {
    if (m < 1) throw PreconditionError("sine_coefficient: m >= 1");
    Interval dom = f.domain();
    if (dom.left != 0.0) throw PreconditionError("sine_coefficient expects a domain [0, L]");
    double L = dom.right;
    auto g = [&f, m, L](double x) { return f(x) * sin_pi(static_cast<double>(m) * x / L); };
    return 2.0 / L * integrate_checked(g, 0.0, L, rel_tol, mode_panels(m));
}

double DecayBound::bound(int m) const {
    return constant / std::pow(static_cast<double>(m), static_cast<double>(order));
}

DecayBound decay_bound(const FunctionSpec& h, int n, int verified_class) {
    if (n < 0 || n > 4) throw PreconditionError("decay_bound: order must be in 0..4");
    Interval dom = h.domain();
    if (dom.left != -dom.right) throw PreconditionError("decay_bound expects a domain [-L, L]");
    double L = dom.right;

    constexpr std::size_t kNormGrid = 4097;
    FunctionSpec deriv = (n == 0) ? sample(h, kNormGrid) : fd_derivative(sample(h, kNormGrid), n);
    const auto& v = deriv.values();
    double hstep = deriv.grid_step();
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double w = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
        acc.add(w * std::fabs(v[i]));
    }
    double norm1 = acc.value() * hstep;

    DecayBound out;
    out.order = n;
    out.constant = std::pow(L, n - 1) * norm1 / (2.0 * std::pow(M_PI, n));
    out.hypothesis_verified = verified_class >= n;
    return out;
}

DecayBound decay_bound(const ExtensionResult& ext, int n) {
    return decay_bound(ext.h, n, ext.min_seam_class());
}

TailBound sine_tail_bound(const FunctionSpec& f, int truncation) {
    if (truncation < 1) throw PreconditionError("sine_tail_bound: truncation >= 1");
    ExtensionResult ext = odd_extend(f);
    int k = std::clamp(ext.min_seam_class(), 0, 4);
    DecayBound b = decay_bound(ext, k);
    TailBound out;
    out.order = k;
    out.constant = b.constant;
    if (k >= 2) {
        double m = static_cast<double>(truncation);
        out.value = b.constant * std::pow(m, 1.0 - k) / (k - 1.0);
        out.finite = true;
    } else {
        out.value = std::numeric_limits<double>::infinity();
        out.finite = false;
    }
    return out;
}

double partial_sum(std::span<const double> coeffs, int M, double x, double L) {
    if (M < 0 || static_cast<std::size_t>(M) > coeffs.size())
        throw PreconditionError("partial_sum: coefficients for 1..M required");
    CompensatedSum<double> acc;
    for (int m = 1; m <= M; ++m)
        acc.add(coeffs[static_cast<std::size_t>(m - 1)] * sin_pi(static_cast<double>(m) * x / L));
    return acc.value();
}

double uniform_error(const FunctionSpec& f, int M, std::size_t grid_points,
                     std::optional<std::uint64_t> jitter_seed, double rel_tol) {
    Interval dom = f.domain();
    if (dom.left != 0.0) throw PreconditionError("uniform_error expects a domain [0, L]");
    double L = dom.right;
    std::vector<double> coeffs(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) coeffs[static_cast<std::size_t>(m - 1)] = sine_coefficient(f, m, rel_tol);

    std::mt19937_64 rng(jitter_seed.value_or(0));
    std::uniform_real_distribution<double> jit(-0.5, 0.5);
    double dx = L / static_cast<double>(grid_points - 1);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        double x = dx * static_cast<double>(i);
        if (jitter_seed && i > 0 && i + 1 < grid_points) x += jit(rng) * dx;
        double err = std::fabs(f(x) - partial_sum(coeffs, M, x, L));
        sup = std::max(sup, err);
    }
    return sup;
}

std::vector<CoefficientRow> coefficient_table(const FunctionSpec& f, int max_mode,
                                              const DecayBound& bound, double rel_tol) {
    if (max_mode < 1) throw PreconditionError("coefficient_table: max_mode >= 1");
    std::vector<CoefficientRow> rows(static_cast<std::size_t>(max_mode));

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{1};
    auto worker = [&]() {
        for (;;) {
            int m = next.fetch_add(1);
            if (m > max_mode) return;
            CoefficientRow& r = rows[static_cast<std::size_t>(m - 1)];
            r.mode = m;
            r.value = sine_coefficient(f, m, rel_tol);
            r.bound = bound.bound(m);
            r.measured_ratio = (std::fabs(r.value) / 2.0) / r.bound;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

double decay_slope(std::span<const CoefficientRow> rows, int m_lo, int m_hi, double floor) {
    std::vector<double> lx, ly;
    for (const auto& r : rows) {
        if (r.mode < m_lo || r.mode > m_hi) continue;
        if (std::fabs(r.value) < floor) continue;
        lx.push_back(std::log(static_cast<double>(r.mode)));
        ly.push_back(std::log(std::fabs(r.value)));
    }
    if (lx.size() < 2) throw PreconditionError("decay_slope: fewer than 2 usable modes");
    return fit_slope(lx, ly);
}

} // namespace stringspec
