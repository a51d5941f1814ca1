#pragma once

#include <span>
#include <vector>

#include "extend.hpp"
#include "function_spec.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace stringspec {

/// One boundary-derivative condition g^(order)(endpoint) = value.
struct BoundaryTarget {
    Endpoint endpoint = Endpoint::left;
    int order = 0;
    double value = 0.0;
};

/// The reduced kernel matrix over monomials x^{2n+1..4n+1}: rows are the value
/// and derivative orders 1..2n at L, with powers of L factored per row so that
/// entry(j,k) = (2n+1+k)!/(2n+1+k-j)! * L^k and det = 2 L^3 at n = 1.
struct BoundaryMatrix {
    int n = 1;
    double L = 1.0;
    MatrixLd entries;
    double det = 0.0;
    double condition = 0.0;
};

BoundaryMatrix build_boundary_matrix(int n, double L);

/// Unique polynomial of degree <= 4n+1 with g(0)=g(L)=0, vanishing odd
/// derivatives 1..2n-1 at both ends, and the supplied even-order targets
/// (orders 2..2n; omitted targets are zero). Direct partial-pivot solve of the
/// full 2(2n+1) system.
Polynomial boundary_polynomial(std::span<const BoundaryTarget> data, int n, double L);

/// Verification route for the same polynomial: impose the left-endpoint Taylor
/// conditions directly and solve only the reduced right-endpoint system. Kept
/// independent of boundary_polynomial so the two can be cross-checked.
Polynomial boundary_polynomial_reduced(std::span<const BoundaryTarget> data, int n, double L);

struct MatchedOrder {
    Endpoint endpoint;
    int order;
    double target;             // estimated boundary derivative of f
    double achieved;           // analytic derivative of f1
    double remainder_estimate; // estimated boundary derivative of f2
};

/// f = f1 + f2 with f1 carrying f's even-order boundary data (orders 2..2n) so
/// that f2 extends oddly with class C^{2n}, and f1 itself extends evenly.
struct DecompositionResult {
    Polynomial f1;
    FunctionSpec f2; // evaluates f(x) - f1(x)
    std::vector<MatchedOrder> matched;
    double condition = 0.0;
};

DecompositionResult decompose(const FunctionSpec& f, int n);

/// Influence polynomials: f1 rebuilds as
///   sum_k lambda[k](x) * f^(2k)(0) + mu[k](x) * f^(2k)(L),   k = 1..n.
struct InfluenceTable {
    int n = 1;
    double L = 1.0;
    std::vector<Polynomial> lambda; // index k-1
    std::vector<Polynomial> mu;
    Polynomial reconstruct(std::span<const double> left_targets,
                           std::span<const double> right_targets) const;
};

InfluenceTable influence_coefficients(int n, double L);

/// g = even_extend(f1) + odd_extend(f2), class C^{2n} on [-L, L]; restriction
/// to [0, L] evaluates f exactly.
ExtensionResult compose_extension(const FunctionSpec& f, int n, double seam_tol = 1e-5);

} // namespace stringspec
