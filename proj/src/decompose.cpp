#include "decompose.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace stringspec {

namespace {

long double falling_factorial(int i, int j) {
    long double r = 1.0L;
    for (int t = 0; t < j; ++t) r *= static_cast<long double>(i - t);
    return r;
}

void check_order_params(int n, double L) {
    if (n < 1 || n > 4) throw PreconditionError("boundary systems support 1 <= n <= 4");
    if (!(L > 0.0) || !std::isfinite(L)) throw PreconditionError("L must be positive");
}

// Full 2(2n+1) x (4n+2) system: rows alternate g^(j)(0), g^(j)(L) for
// j = 0..2n over coefficients a_0..a_{4n+1}.
MatrixLd full_system(int n, double L) {
    const std::size_t dim = static_cast<std::size_t>(4 * n + 2);
    MatrixLd a(dim, dim);
    std::size_t r = 0;
    for (int j = 0; j <= 2 * n; ++j) {
        a(r, static_cast<std::size_t>(j)) = falling_factorial(j, j);
        ++r;
        for (int i = j; i < static_cast<int>(dim); ++i)
            a(r, static_cast<std::size_t>(i)) =
                falling_factorial(i, j) * std::pow(static_cast<long double>(L), i - j);
        ++r;
    }
    return a;
}

std::vector<long double> full_rhs(std::span<const BoundaryTarget> data, int n) {
    const std::size_t dim = static_cast<std::size_t>(4 * n + 2);
    std::vector<long double> b(dim, 0.0L);
    for (const auto& t : data) {
        if (t.order < 0 || t.order > 2 * n || t.order % 2 != 0 || t.order == 0)
            throw PreconditionError("boundary targets must name even orders 2..2n");
        std::size_t row = 2 * static_cast<std::size_t>(t.order) + (t.endpoint == Endpoint::right ? 1 : 0);
        b[row] = static_cast<long double>(t.value);
    }
    return b;
}

Polynomial to_polynomial(const std::vector<long double>& coeffs) {
    std::vector<double> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<double>(coeffs[i]);
    return Polynomial(std::move(c));
}

} // namespace

BoundaryMatrix build_boundary_matrix(int n, double L) {
    check_order_params(n, L);
    const std::size_t dim = static_cast<std::size_t>(2 * n + 1);
    MatrixLd a(dim, dim);
    long double scale = 0.0L;
    for (int j = 0; j <= 2 * n; ++j) {
        for (int k = 0; k <= 2 * n; ++k) {
            int power = 2 * n + 1 + k;
            a(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                falling_factorial(power, j) * std::pow(static_cast<long double>(L), k);
            scale = std::max(scale, std::fabs(a(static_cast<std::size_t>(j), static_cast<std::size_t>(k))));
        }
    }
    long double det = determinant(a);
    if (std::fabs(det) < 1e-12L * scale)
        throw SingularSystem("boundary matrix numerically singular: n/L outside supported range");
    BoundaryMatrix out;
    out.n = n;
    out.L = L;
    out.entries = a;
    out.det = static_cast<double>(det);
    out.condition = condition_inf(a);
    return out;
}

Polynomial boundary_polynomial(std::span<const BoundaryTarget> data, int n, double L) {
    check_order_params(n, L);
    auto res = lu_solve(full_system(n, L), full_rhs(data, n));
    return to_polynomial(res.solution);
}

Polynomial boundary_polynomial_reduced(std::span<const BoundaryTarget> data, int n, double L) {
    check_order_params(n, L);
    const std::size_t dim = static_cast<std::size_t>(2 * n + 1);
    auto rhs_full = full_rhs(data, n);

    // left-endpoint Taylor conditions pin a_0..a_{2n}
    std::vector<long double> low(static_cast<std::size_t>(2 * n + 1), 0.0L);
    for (int j = 0; j <= 2 * n; ++j)
        low[static_cast<std::size_t>(j)] = rhs_full[2 * static_cast<std::size_t>(j)] / falling_factorial(j, j);

    // right-endpoint conditions become a square system over a_{2n+1..4n+1},
    // using the raw (unnormalized) kernel entries.
    MatrixLd a(dim, dim);
    std::vector<long double> b(dim, 0.0L);
    for (int j = 0; j <= 2 * n; ++j) {
        for (int k = 0; k <= 2 * n; ++k) {
            int power = 2 * n + 1 + k;
            a(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                falling_factorial(power, j) * std::pow(static_cast<long double>(L), power - j);
        }
        long double fixed = 0.0L;
        for (int i = j; i <= 2 * n; ++i)
            fixed += falling_factorial(i, j) * std::pow(static_cast<long double>(L), i - j) *
                     low[static_cast<std::size_t>(i)];
        b[static_cast<std::size_t>(j)] = rhs_full[2 * static_cast<std::size_t>(j) + 1] - fixed;
    }
    auto res = lu_solve(std::move(a), std::move(b));
    std::vector<long double> coeffs(static_cast<std::size_t>(4 * n + 2), 0.0L);
    for (int j = 0; j <= 2 * n; ++j) coeffs[static_cast<std::size_t>(j)] = low[static_cast<std::size_t>(j)];
    for (int k = 0; k <= 2 * n; ++k)
        coeffs[static_cast<std::size_t>(2 * n + 1 + k)] = res.solution[static_cast<std::size_t>(k)];
    return to_polynomial(coeffs);
}

DecompositionResult decompose(const FunctionSpec& f, int n) {
    Interval dom = f.domain();
    if (dom.left != 0.0) throw PreconditionError("decompose expects a domain [0, L]");
    check_order_params(n, dom.right);
    if (f.claimed_smoothness() < 2 * n)
        throw PreconditionError("decompose: f must be C^{2n}-evaluable at the boundaries");
    double scale = 0.0;
    for (int i = 0; i <= 64; ++i)
        scale = std::max(scale, std::fabs(f(dom.right * i / 64.0)));
    if (std::fabs(f(0.0)) > 1e-9 * (1.0 + scale) || std::fabs(f(dom.right)) > 1e-9 * (1.0 + scale))
        throw PreconditionError("decompose: f must vanish at both endpoints");

    std::vector<BoundaryTarget> data;
    std::vector<DerivativeEstimate> ests;
    for (int k = 1; k <= n; ++k) {
        for (Endpoint e : {Endpoint::left, Endpoint::right}) {
            DerivativeEstimate est = one_sided_derivative_estimate(f, e, 2 * k);
            if (!est.reliable(1e-3)) {
                std::ostringstream msg;
                msg << "decompose: unreliable boundary derivative of order " << 2 * k << " at the "
                    << (e == Endpoint::left ? "left" : "right") << " endpoint (spread "
                    << est.spread << ")";
                throw UnreliableEstimate(msg.str());
            }
            data.push_back({e, 2 * k, est.value});
            ests.push_back(est);
        }
    }

    DecompositionResult out;
    out.f1 = boundary_polynomial(data, n, dom.right);
    out.condition = condition_inf(full_system(n, dom.right));

    Polynomial f1 = out.f1;
    out.f2 = FunctionSpec::closed_form_ld(
        dom, [f, f1](long double x) { return f.eval_ld(x) - f1.eval_ld(x); },
        f.claimed_smoothness());

    for (const auto& t : data) {
        MatchedOrder m;
        m.endpoint = t.endpoint;
        m.order = t.order;
        m.target = t.value;
        double x = (t.endpoint == Endpoint::left) ? 0.0 : dom.right;
        m.achieved = out.f1.derivative_at(x, t.order);
        m.remainder_estimate = one_sided_derivative_estimate(out.f2, t.endpoint, t.order).value;
        out.matched.push_back(m);
    }
    return out;
}

Polynomial InfluenceTable::reconstruct(std::span<const double> left_targets,
                                       std::span<const double> right_targets) const {
    if (left_targets.size() != lambda.size() || right_targets.size() != mu.size())
        throw PreconditionError("influence reconstruct: need one target per order index");
    Polynomial acc;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        Polynomial a = lambda[k];
        a *= left_targets[k];
        Polynomial b = mu[k];
        b *= right_targets[k];
        acc = acc + a + b;
    }
    return acc;
}

InfluenceTable influence_coefficients(int n, double L) {
    check_order_params(n, L);
    InfluenceTable t;
    t.n = n;
    t.L = L;
    for (int k = 1; k <= n; ++k) {
        BoundaryTarget unit_left{Endpoint::left, 2 * k, 1.0};
        BoundaryTarget unit_right{Endpoint::right, 2 * k, 1.0};
        t.lambda.push_back(boundary_polynomial({&unit_left, 1}, n, L));
        t.mu.push_back(boundary_polynomial({&unit_right, 1}, n, L));
    }
    return t;
}

ExtensionResult compose_extension(const FunctionSpec& f, int n, double seam_tol) {
    DecompositionResult d = decompose(f, n);
    Interval dom = f.domain();
    double L = dom.right;
    Polynomial f1 = d.f1;

    // even_extend(f1) + odd_extend(f2) telescopes: f(x) for x >= 0, and
    // 2 f1(-x) - f(-x) on the reflected side. The x >= 0 branch reproduces f
    // bit-for-bit.
    FunctionSpec h = FunctionSpec::closed_form_ld(
        Interval{-L, L},
        [f, f1](long double x) -> long double {
            if (x >= 0.0L) return f.eval_ld(x);
            return 2.0L * f1.eval_ld(-x) - f.eval_ld(-x);
        },
        f.claimed_smoothness());

    ExtensionResult out{std::move(h), Parity::mixed, {}};
    out.seams = seam_smoothness(out, std::min(2 * n, 4), seam_tol);
    ParityReport par = parity_check(out.h);
    out.parity = par.klass;
    return out;
}

} // namespace stringspec
