#include "derivative.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace stringspec {

std::vector<long double> fd_weights(int order, std::span<const long double> nodes, long double x0) {
    const int n = static_cast<int>(nodes.size());
    const int d = order;
    std::vector<std::vector<long double>> c(
        static_cast<std::size_t>(n), std::vector<long double>(static_cast<std::size_t>(d) + 1, 0.0L));
    long double c1 = 1.0L;
    long double c4 = nodes[0] - x0;
    c[0][0] = 1.0L;
    for (int i = 1; i < n; ++i) {
        int mn = std::min(i, d);
        long double c2 = 1.0L;
        long double c5 = c4;
        c4 = nodes[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            long double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k > 0; --k)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                              c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) /
                        c2;
                c[static_cast<std::size_t>(i)][0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k > 0; --k)
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                     k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) /
                    c3;
            c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<long double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
    return w;
}

namespace {

constexpr int kStencilPoints = 10; // exact through degree 9

// Initial step divisor per derivative order. Orders 3 and 4 need a larger
// base step: the h^-order amplification of evaluation roundoff exceeds the
// polynomial-exactness contract below these divisors.
constexpr std::array<int, 5> kStepDivisor = {64, 64, 64, 32, 16};

// Unit-spacing weights for nodes {0, 1, ..., 9}.
std::vector<long double> unit_weights(int order) {
    std::array<long double, kStencilPoints> nodes{};
    for (int i = 0; i < kStencilPoints; ++i) nodes[static_cast<std::size_t>(i)] = i;
    return fd_weights(order, std::span<const long double>(nodes.data(), nodes.size()), 0.0L);
}

} // namespace

DerivativeEstimate one_sided_estimate(const std::function<long double(long double)>& f,
                                      double x0, int direction, int order, double span) {
    if (order < 0 || order > 4) throw PreconditionError("one_sided_estimate: order must be in 0..4");
    if (!(span > 0.0)) throw PreconditionError("one_sided_estimate: span must be positive");
    if (order == 0) {
        double v = static_cast<double>(f(static_cast<long double>(x0)));
        if (!std::isfinite(v)) throw NonFiniteValue(x0);
        return {v, 0.0, 0.0};
    }

    static const std::array<std::vector<long double>, 5> weights = {
        std::vector<long double>{}, unit_weights(1), unit_weights(2), unit_weights(3), unit_weights(4)};
    const auto& w = weights[static_cast<std::size_t>(order)];

    const long double h0 = static_cast<long double>(span) / kStepDivisor[static_cast<std::size_t>(order)];
    const long double dir = direction >= 0 ? 1.0L : -1.0L;
    const long double sign = (order % 2 == 0 || direction >= 0) ? 1.0L : -1.0L;

    std::array<long double, 3> base{};
    for (int lev = 0; lev < 3; ++lev) {
        long double h = h0 / static_cast<long double>(1 << lev);
        CompensatedSum<long double> acc;
        for (int i = 0; i < kStencilPoints; ++i) {
            long double xi = static_cast<long double>(x0) + dir * static_cast<long double>(i) * h;
            long double fi = f(xi);
            if (!std::isfinite(static_cast<double>(fi))) throw NonFiniteValue(static_cast<double>(xi));
            acc.add(w[static_cast<std::size_t>(i)] * fi);
        }
        long double hp = 1.0L;
        for (int k = 0; k < order; ++k) hp *= h;
        base[static_cast<std::size_t>(lev)] = sign * acc.value() / hp;
    }

    // Neville ladder: base accuracy order p = points - order, next level p+1.
    const int p = kStencilPoints - order;
    long double best = base[1];
    long double best_err = std::fabs(base[1] - base[0]);
    auto consider = [&](long double val, long double err) {
        if (err < best_err) {
            best = val;
            best_err = err;
        }
    };
    consider(base[2], std::fabs(base[2] - base[1]));

    long double f1 = std::pow(2.0L, p) - 1.0L;
    long double r1a = base[1] + (base[1] - base[0]) / f1;
    long double r1b = base[2] + (base[2] - base[1]) / f1;
    consider(r1a, std::fabs(r1a - base[1]));
    consider(r1b, std::fabs(r1b - base[2]));
    long double f2 = std::pow(2.0L, p + 1) - 1.0L;
    long double r2 = r1b + (r1b - r1a) / f2;
    consider(r2, std::fabs(r2 - r1b));

    return {static_cast<double>(best), static_cast<double>(best_err),
            static_cast<double>(std::fabs(base[2] - base[1]))};
}

DerivativeEstimate one_sided_derivative_estimate(const FunctionSpec& f, Endpoint e, int order) {
    Interval dom = f.domain();
    double x0 = (e == Endpoint::left) ? dom.left : dom.right;
    int direction = (e == Endpoint::left) ? +1 : -1;
    auto eval = [&f](long double x) { return f.eval_ld(x); };
    return one_sided_estimate(eval, x0, direction, order, dom.length());
}

double one_sided_derivative(const FunctionSpec& f, Endpoint e, int order, double tol_rel) {
    DerivativeEstimate est = one_sided_derivative_estimate(f, e, order);
    if (!est.reliable(tol_rel)) {
        std::ostringstream msg;
        msg << "unreliable derivative: order " << order << " at "
            << (e == Endpoint::left ? "left" : "right") << " endpoint, value " << est.value
            << ", successive estimates differ by " << est.spread;
        throw UnreliableEstimate(msg.str());
    }
    return est.value;
}

FunctionSpec fd_derivative(const FunctionSpec& f, int order) {
    if (order < 1 || order > 4) throw PreconditionError("fd_derivative: order must be in 1..4");
    if (!f.is_sampled()) throw PreconditionError("fd_derivative: input must be sampled");
    const auto& v = f.values();
    const std::size_t n = v.size();
    // interior central width; offset end stencils get one extra point (third
    // order) so a differentiated field keeps O(h^2) accuracy end to end
    const std::size_t wc = (order <= 2) ? 3 : 5;
    const std::size_t wb = static_cast<std::size_t>(order) + 3;
    const std::size_t width = std::max(wc, wb);
    if (n < width) throw PreconditionError("fd_derivative: too few points for the stencil");
    const double h = f.grid_step();

    const long double half = static_cast<long double>(wc / 2);
    std::vector<long double> nodes_c(wc);
    for (std::size_t i = 0; i < wc; ++i) nodes_c[i] = static_cast<long double>(i) - half;
    auto w_center = fd_weights(order, nodes_c, 0.0L);

    long double hp = 1.0L;
    for (int k = 0; k < order; ++k) hp *= static_cast<long double>(h);

    std::vector<double> out(n);
    std::vector<long double> nodes_b(width);
    for (std::size_t i = 0; i < n; ++i) {
        bool interior = i >= wc / 2 && i + wc / 2 < n;
        if (interior) {
            CompensatedSum<long double> acc;
            for (std::size_t j = 0; j < wc; ++j)
                acc.add(w_center[j] * static_cast<long double>(v[i - wc / 2 + j]));
            out[i] = static_cast<double>(acc.value() / hp);
        } else {
            std::size_t start = (i < width / 2) ? 0 : n - width;
            for (std::size_t j = 0; j < width; ++j)
                nodes_b[j] = static_cast<long double>(start + j);
            auto w = fd_weights(order, nodes_b, static_cast<long double>(i));
            CompensatedSum<long double> acc;
            for (std::size_t j = 0; j < width; ++j)
                acc.add(w[j] * static_cast<long double>(v[start + j]));
            out[i] = static_cast<double>(acc.value() / hp);
        }
    }
    return FunctionSpec::sampled(f.domain(), std::move(out),
                                 std::max(0, f.claimed_smoothness() - order));
}

} // namespace stringspec
