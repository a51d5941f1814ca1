#include "linalg.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace stringspec {

namespace {

struct Factored {
    MatrixLd lu;
    std::vector<std::size_t> perm;
    long double det;
};

Factored factor(MatrixLd a, long double singular_tol) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw PreconditionError("lu: matrix must be square");
    long double scale = 0.0L;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, std::fabs(a(r, c)));
    if (scale == 0.0L) throw SingularSystem("zero matrix");

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    long double det = 1.0L;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::fabs(a(r, k)) > std::fabs(a(p, k))) p = r;
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            std::swap(perm[k], perm[p]);
            det = -det;
        }
        long double piv = a(k, k);
        if (std::fabs(piv) < singular_tol * scale)
            throw SingularSystem("numerically singular system (pivot " +
                                 std::to_string(static_cast<double>(piv)) + ")");
        det *= piv;
        for (std::size_t r = k + 1; r < n; ++r) {
            long double m = a(r, k) / piv;
            a(r, k) = m;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= m * a(k, c);
        }
    }
    return {std::move(a), std::move(perm), det};
}

std::vector<long double> solve_factored(const Factored& f, const std::vector<long double>& b) {
    const std::size_t n = f.lu.rows();
    std::vector<long double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

} // namespace

LuResult lu_solve(MatrixLd a, std::vector<long double> b, long double singular_tol) {
    if (b.size() != a.rows()) throw PreconditionError("lu_solve: size mismatch");
    Factored f = factor(std::move(a), singular_tol);
    return {solve_factored(f, b), f.det};
}

long double determinant(const MatrixLd& a) {
    try {
        Factored f = factor(a, 0.0L);
        return f.det;
    } catch (const SingularSystem&) {
        return 0.0L;
    }
}

double condition_inf(const MatrixLd& a) {
    const std::size_t n = a.rows();
    Factored f = factor(a, std::numeric_limits<long double>::min());
    long double norm_a = 0.0L, norm_inv = 0.0L;
    std::vector<long double> row_inv(n, 0.0L);
    for (std::size_t r = 0; r < n; ++r) {
        long double s = 0.0L;
        for (std::size_t c = 0; c < n; ++c) s += std::fabs(a(r, c));
        norm_a = std::max(norm_a, s);
    }
    // columns of the inverse, accumulate |.| per row
    std::vector<long double> e(n, 0.0L);
    for (std::size_t c = 0; c < n; ++c) {
        e.assign(n, 0.0L);
        e[c] = 1.0L;
        auto x = solve_factored(f, e);
        for (std::size_t r = 0; r < n; ++r) row_inv[r] += std::fabs(x[r]);
    }
    for (std::size_t r = 0; r < n; ++r) norm_inv = std::max(norm_inv, row_inv[r]);
    return static_cast<double>(norm_a * norm_inv);
}

} // namespace stringspec
