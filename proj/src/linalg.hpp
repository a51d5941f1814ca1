#pragma once

#include <cstddef>
#include <vector>

namespace stringspec {

/// Dense row-major matrix in long double. The boundary-matching systems are at
/// most 18x18 but reach condition numbers ~1e15 at n=4; extended precision
/// keeps the supported range usable.
class MatrixLd {
public:
    MatrixLd() = default;
    MatrixLd(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0L) {}

    long double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    long double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<long double> a_;
};

struct LuResult {
    std::vector<long double> solution;
    long double determinant = 0.0L;
};

/// Partial-pivot LU solve of A x = b. Throws SingularSystem when a pivot
/// falls below `singular_tol` times the matrix scale.
LuResult lu_solve(MatrixLd a, std::vector<long double> b, long double singular_tol = 1e-12L);

long double determinant(const MatrixLd& a);

/// Infinity-norm condition number estimate (explicit inverse; fine at n<=18).
double condition_inf(const MatrixLd& a);

} // namespace stringspec
