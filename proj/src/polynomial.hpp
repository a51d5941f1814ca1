#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "function_spec.hpp"

namespace stringspec {

/// Dense polynomial, ascending coefficients, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    double operator()(double x) const;
    long double eval_ld(long double x) const;

    /// k-th derivative as a polynomial.
    Polynomial derivative(int k = 1) const;
    /// Value of the k-th derivative at x (long double Horner).
    double derivative_at(double x, int k) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial& operator*=(double s);

    int degree() const; // -1 for the zero polynomial
    const std::vector<double>& coefficients() const { return coeffs_; }
    bool is_zero(double tol = 0.0) const;

    FunctionSpec as_function(Interval dom) const;

private:
    std::vector<double> coeffs_;
    void trim();
};

} // namespace stringspec
