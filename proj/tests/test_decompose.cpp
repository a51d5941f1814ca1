#include <doctest.h>

#include <cmath>
#include <random>

#include "decompose.hpp"
#include "errors.hpp"

using namespace stringspec;

namespace {

FunctionSpec poly_fn(std::vector<double> c) { return make_registered("poly", c, {0.0, 1.0}); }
FunctionSpec sine1() { return make_registered("sine_mode", std::vector<double>{1}, {0.0, 1.0}); }

void check_coeffs(const Polynomial& got, const std::vector<double>& want, double tol) {
    const auto& g = got.coefficients();
    for (std::size_t i = 0; i < std::max(g.size(), want.size()); ++i) {
        double a = i < g.size() ? g[i] : 0.0;
        double b = i < want.size() ? want[i] : 0.0;
        CHECK(std::fabs(a - b) <= tol);
    }
}

} // namespace

TEST_CASE("boundary kernel matrix at n=1") {
    BoundaryMatrix bm = build_boundary_matrix(1, 1.0);
    const double want[3][3] = {{1, 1, 1}, {3, 4, 5}, {6, 12, 20}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(static_cast<double>(bm.entries(r, c)) == doctest::Approx(want[r][c]));
    CHECK(bm.det == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(build_boundary_matrix(1, 2.0).det == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("kernel determinants at higher order against exact elimination") {
    // frozen oracle values from exact rational elimination of the same matrix
    CHECK(build_boundary_matrix(2, 1.0).det == doctest::Approx(288.0).epsilon(1e-11));
    CHECK(build_boundary_matrix(3, 1.0).det == doctest::Approx(24883200.0).epsilon(1e-10));
}

TEST_CASE("determinant scaling law: integer exponent in L") {
    // measured exponents n(2n+1), recorded; the test asserts integrality
    const int expected_exponent[] = {0, 3, 10, 21};
    for (int n : {1, 2, 3}) {
        double d1 = build_boundary_matrix(n, 1.0).det;
        double d2 = build_boundary_matrix(n, 2.0).det;
        double expo = std::log2(d2 / d1);
        CHECK(std::fabs(expo - std::round(expo)) <= 1e-9);
        CHECK(static_cast<int>(std::round(expo)) == expected_exponent[n]);
    }
}

TEST_CASE("boundary matrix rejects bad parameters") {
    CHECK_THROWS_AS(build_boundary_matrix(0, 1.0), PreconditionError);
    CHECK_THROWS_AS(build_boundary_matrix(5, 1.0), PreconditionError);
    CHECK_THROWS_AS(build_boundary_matrix(1, 0.0), PreconditionError);
    CHECK_THROWS_AS(build_boundary_matrix(1, -2.0), PreconditionError);
}

TEST_CASE("boundary polynomial examples") {
    std::vector<BoundaryTarget> data = {{Endpoint::left, 2, -2.0}, {Endpoint::right, 2, -2.0}};
    check_coeffs(boundary_polynomial(data, 1, 1.0), {0, 0, -1, 2, -1}, 1e-12);

    std::vector<BoundaryTarget> zero = {{Endpoint::left, 2, 0.0}, {Endpoint::right, 2, 0.0}};
    CHECK(boundary_polynomial(zero, 1, 1.0).is_zero(1e-14));
    CHECK(boundary_polynomial({}, 2, 1.0).is_zero(1e-14));
}

TEST_CASE("boundary polynomial is linear in its targets") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<BoundaryTarget> da, db, dc;
            double a = dist(rng), b = dist(rng);
            for (int k = 1; k <= n; ++k) {
                for (Endpoint e : {Endpoint::left, Endpoint::right}) {
                    double va = dist(rng), vb = dist(rng);
                    da.push_back({e, 2 * k, va});
                    db.push_back({e, 2 * k, vb});
                    dc.push_back({e, 2 * k, a * va + b * vb});
                }
            }
            Polynomial pa = boundary_polynomial(da, n, 1.0);
            Polynomial pb = boundary_polynomial(db, n, 1.0);
            Polynomial pc = boundary_polynomial(dc, n, 1.0);
            pa *= a;
            pb *= b;
            Polynomial sum = pa + pb;
            const auto& gc = pc.coefficients();
            const auto& gs = sum.coefficients();
            for (std::size_t i = 0; i < std::max(gc.size(), gs.size()); ++i) {
                double x = i < gc.size() ? gc[i] : 0.0;
                double y = i < gs.size() ? gs[i] : 0.0;
                CHECK(std::fabs(x - y) <= 1e-10 * (1.0 + std::fabs(x)));
            }
        }
    }
}

TEST_CASE("direct and reduced solve routes agree") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int n : {1, 2, 3}) {
        double tol = (n <= 2) ? 1e-9 : 1e-6; // n=3 system condition ~1e11
        for (double L : {0.5, 1.0, 2.0}) {
            std::vector<BoundaryTarget> data;
            for (int k = 1; k <= n; ++k) {
                data.push_back({Endpoint::left, 2 * k, dist(rng)});
                data.push_back({Endpoint::right, 2 * k, dist(rng)});
            }
            Polynomial a = boundary_polynomial(data, n, L);
            Polynomial b = boundary_polynomial_reduced(data, n, L);
            const auto& ca = a.coefficients();
            const auto& cb = b.coefficients();
            for (std::size_t i = 0; i < std::max(ca.size(), cb.size()); ++i) {
                double x = i < ca.size() ? ca[i] : 0.0;
                double y = i < cb.size() ? cb[i] : 0.0;
                CHECK(std::fabs(x - y) <= tol * (1.0 + std::fabs(x)));
            }
        }
    }
}

TEST_CASE("decompose splits f against its even-order boundary data") {
    SUBCASE("x(1-x), n=1") {
        auto d = decompose(poly_fn({0, 1, -1}), 1);
        check_coeffs(d.f1, {0, 0, -1, 2, -1}, 1e-9);
        for (const auto& m : d.matched) CHECK(std::fabs(m.remainder_estimate) <= 1e-8);
        for (int i = 0; i <= 64; ++i) {
            double x = i / 64.0;
            CHECK(std::fabs(d.f1(x) + d.f2(x) - (x * (1 - x))) <= 1e-12);
        }
    }
    SUBCASE("x(1-x), n=2 (frozen oracle from exact elimination)") {
        auto d = decompose(poly_fn({0, 1, -1}), 2);
        check_coeffs(d.f1, {0, 0, -1, 0, 0, 14, -28, 20, -5}, 1e-8);
    }
    SUBCASE("sin(pi x), n=1: zero targets give the zero polynomial") {
        auto d = decompose(sine1(), 1);
        CHECK(d.f1.is_zero(1e-10));
    }
    SUBCASE("x^3(1-x)^3, n=1: vanishing curvature keeps f intact") {
        auto d = decompose(poly_fn({0, 0, 0, 1, -3, 3, -1}), 1);
        CHECK(d.f1.is_zero(1e-10));
    }
}

TEST_CASE("decompose rejects bad inputs") {
    CHECK_THROWS_AS(decompose(poly_fn({0, 1}), 1), PreconditionError); // f(1) != 0
    auto sampled = sample(poly_fn({0, 1, -1}), 33);
    CHECK_THROWS_AS(decompose(sampled, 1), PreconditionError); // claimed smoothness 0
}

TEST_CASE("influence table at n=1 matches the pinned polynomials") {
    InfluenceTable t = influence_coefficients(1, 1.0);
    REQUIRE(t.lambda.size() == 1);
    check_coeffs(t.lambda[0], {0, 0, 0.5, -1.5, 1.5, -0.5}, 1e-12);
    CHECK(t.lambda[0].coefficients()[2] == doctest::Approx(0.5).epsilon(1e-13));
    check_coeffs(t.mu[0], {0, 0, 0, 0.5, -1.0, 0.5}, 1e-12);
    // mu is lambda reflected through x -> 1-x
    for (int i = 0; i <= 32; ++i) {
        double x = i / 32.0;
        CHECK(t.mu[0](x) == doctest::Approx(t.lambda[0](1.0 - x)).epsilon(1e-12));
    }
}

TEST_CASE("influence reconstruction equals the direct solve") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int n : {1, 2}) {
        InfluenceTable t = influence_coefficients(n, 1.0);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> l(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n));
            std::vector<BoundaryTarget> data;
            for (int k = 1; k <= n; ++k) {
                l[static_cast<std::size_t>(k - 1)] = dist(rng);
                r[static_cast<std::size_t>(k - 1)] = dist(rng);
                data.push_back({Endpoint::left, 2 * k, l[static_cast<std::size_t>(k - 1)]});
                data.push_back({Endpoint::right, 2 * k, r[static_cast<std::size_t>(k - 1)]});
            }
            Polynomial direct = boundary_polynomial(data, n, 1.0);
            Polynomial rebuilt = t.reconstruct(l, r);
            const auto& a = direct.coefficients();
            const auto& b = rebuilt.coefficients();
            for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
                double x = i < a.size() ? a[i] : 0.0;
                double y = i < b.size() ? b[i] : 0.0;
                CHECK(std::fabs(x - y) <= 1e-9);
            }
        }
    }
}

TEST_CASE("composed extensions") {
    SUBCASE("sin(pi x), n=2: f1 vanishes and the extension is the sine itself") {
        auto g = compose_extension(sine1(), 2);
        CHECK(g.min_seam_class() >= 4);
        CHECK(g.parity == Parity::odd);
        for (int i = 0; i <= 32; ++i) {
            double x = -1.0 + 2.0 * i / 32.0;
            CHECK(g.h(x) == doctest::Approx(std::sin(M_PI * x)).epsilon(1e-10));
        }
    }
    SUBCASE("x(1-x), n=1: class >= 2 at both seams") {
        auto g = compose_extension(poly_fn({0, 1, -1}), 1);
        CHECK(g.seams[0].cls >= 2);
        CHECK(g.seams[1].cls >= 2);
        CHECK(g.parity == Parity::mixed);
    }
    SUBCASE("x^3(1-x)^3, n=1: reduces to the odd extension") {
        auto f = poly_fn({0, 0, 0, 1, -3, 3, -1});
        auto g = compose_extension(f, 1);
        CHECK(g.min_seam_class() >= 2);
        CHECK(g.h(-0.5) == doctest::Approx(-f(0.5)).epsilon(1e-9));
    }
    SUBCASE("restriction to [0, L] is bit-exact regardless of epsilon") {
        auto f = poly_fn({0, 1, -1});
        auto g = compose_extension(f, 1);
        for (int i = 0; i <= 1024; ++i) {
            double x = i / 1024.0;
            CHECK(g.h(x) == f(x));
        }
    }
}
