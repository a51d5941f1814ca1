#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "stringspec.h"

namespace {

ssp_function* make_poly(std::vector<double> c, double left = 0.0, double right = 1.0) {
    ssp_function* f = nullptr;
    REQUIRE(ssp_function_create("poly", c.data(), c.size(), left, right, &f) == SSP_OK);
    return f;
}

} // namespace

TEST_CASE("version and status strings") {
    CHECK(std::string(ssp_version()) == "0.1.0");
    CHECK(std::string(ssp_status_name(SSP_OK)) == "ok");
    CHECK(std::string(ssp_status_name(SSP_ERR_SINGULAR)) == "singular system");
}

TEST_CASE("function creation, evaluation, sampling") {
    ssp_function* f = make_poly({0, 1, -1});
    double v = 0.0;
    CHECK(ssp_function_eval(f, 0.5, &v) == SSP_OK);
    CHECK(v == doctest::Approx(0.25));

    double grid[5];
    CHECK(ssp_function_sample(f, 5, grid) == SSP_OK);
    CHECK(grid[0] == 0.0);
    CHECK(grid[2] == doctest::Approx(0.25));

    double d = 0.0;
    CHECK(ssp_one_sided_derivative(f, 0, 1, &d) == SSP_OK);
    CHECK(d == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ssp_one_sided_derivative(f, 1, 2, &d) == SSP_OK);
    CHECK(d == doctest::Approx(-2.0).epsilon(1e-10));
    ssp_function_free(f);
}

TEST_CASE("null and invalid arguments") {
    CHECK(ssp_function_create(nullptr, nullptr, 0, 0, 1, nullptr) == SSP_ERR_ARG);
    ssp_function* f = nullptr;
    CHECK(ssp_function_create("no_such_fn", nullptr, 0, 0.0, 1.0, &f) == SSP_ERR_PRECONDITION);
    CHECK(f == nullptr);
    CHECK(std::strlen(ssp_last_error()) > 0);
    double v;
    CHECK(ssp_function_eval(nullptr, 0.0, &v) == SSP_ERR_ARG);
}

TEST_CASE("extension handles") {
    ssp_function* f = make_poly({0, 1, -1});
    ssp_extension* e = nullptr;
    REQUIRE(ssp_extend_odd(f, &e) == SSP_OK);
    double v = 0.0;
    CHECK(ssp_extension_eval(e, -0.5, &v) == SSP_OK);
    CHECK(v == doctest::Approx(-0.25));
    ssp_parity p;
    CHECK(ssp_extension_parity(e, &p) == SSP_OK);
    CHECK(p == SSP_PARITY_ODD);
    int cls = -2;
    CHECK(ssp_extension_seam_class(e, 0, &cls) == SSP_OK);
    CHECK(cls == 1);
    double fl[3], fr[3];
    CHECK(ssp_extension_seam_detail(e, 0, 2, fl, fr) == SSP_OK);
    CHECK(fl[2] == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(fr[2] == doctest::Approx(-2.0).epsilon(1e-8));
    ssp_extension_free(e);

    // non-vanishing endpoints are a precondition failure
    ssp_function* bad = make_poly({0, 1});
    CHECK(ssp_extend_odd(bad, &e) == SSP_ERR_PRECONDITION);
    ssp_function_free(bad);
    ssp_function_free(f);
}

TEST_CASE("composed extension and parity probe") {
    ssp_function* f = make_poly({0, 1, -1});
    ssp_extension* g = nullptr;
    REQUIRE(ssp_extend_composed(f, 1, &g) == SSP_OK);
    int cls = 0;
    CHECK(ssp_extension_seam_class(g, 0, &cls) == SSP_OK);
    CHECK(cls >= 2);
    ssp_extension_free(g);
    ssp_function_free(f);

    std::vector<double> params = {1};
    ssp_function* s = nullptr;
    REQUIRE(ssp_function_create("sine_mode", params.data(), 1, -1.0, 1.0, &s) == SSP_OK);
    ssp_parity p;
    double dev = -1.0;
    CHECK(ssp_parity_check(s, &p, &dev) == SSP_OK);
    CHECK(p == SSP_PARITY_ODD);
    CHECK(dev == 0.0);
    ssp_function_free(s);
}

TEST_CASE("decomposition handle surface") {
    ssp_function* f = make_poly({0, 1, -1});
    ssp_decomposition* d = nullptr;
    REQUIRE(ssp_decompose(f, 1, &d) == SSP_OK);
    size_t count = 0;
    CHECK(ssp_decomposition_f1(d, nullptr, 0, &count) == SSP_OK);
    REQUIRE(count == 5);
    double coeffs[5];
    CHECK(ssp_decomposition_f1(d, coeffs, 5, &count) == SSP_OK);
    CHECK(coeffs[2] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(coeffs[3] == doctest::Approx(2.0).epsilon(1e-9));
    double res = 1.0, cond = 0.0, f2v = 0.0;
    CHECK(ssp_decomposition_residual(d, &res) == SSP_OK);
    CHECK(res <= 1e-8);
    CHECK(ssp_decomposition_condition(d, &cond) == SSP_OK);
    CHECK(cond > 1.0);
    CHECK(ssp_decomposition_f2_eval(d, 0.5, &f2v) == SSP_OK);
    CHECK(f2v == doctest::Approx(0.25 - (-0.25 + 0.25 - 0.0625)).epsilon(1e-9));
    ssp_decomposition_free(d);
    ssp_function_free(f);
}

TEST_CASE("boundary determinant") {
    double det = 0.0, cond = 0.0;
    CHECK(ssp_boundary_determinant(1, 2.0, &det, &cond) == SSP_OK);
    CHECK(det == doctest::Approx(16.0).epsilon(1e-11));
    CHECK(ssp_boundary_determinant(0, 1.0, &det, nullptr) == SSP_ERR_PRECONDITION);
}

TEST_CASE("sine coefficients and tables") {
    ssp_function* f = make_poly({0, 1, -1});
    double b1 = 0.0;
    CHECK(ssp_sine_coefficient(f, 1, &b1) == SSP_OK);
    CHECK(b1 == doctest::Approx(8.0 / std::pow(M_PI, 3)).epsilon(1e-11));

    double values[16], bounds[16], ratios[16];
    CHECK(ssp_coefficient_table(f, 2, 4, 16, values, bounds, ratios) == SSP_OK);
    for (int m = 1; m <= 16; ++m) {
        CHECK(bounds[m - 1] > 0.0);
        CHECK(ratios[m - 1] >= 0.0);
    }

    double err = 0.0;
    CHECK(ssp_uniform_error(f, 9, &err) == SSP_OK);
    CHECK(err < 1e-3);
    double jerr = 0.0;
    CHECK(ssp_uniform_error_jittered(f, 9, 7ULL, &jerr) == SSP_OK);
    CHECK(jerr < 1e-3);

    double slope = 0.0;
    CHECK(ssp_decay_slope(f, 8, 64, &slope) == SSP_OK);
    CHECK(slope == doctest::Approx(-3.0).epsilon(1e-6));

    double tail = 0.0;
    int order = -1;
    CHECK(ssp_sine_tail_bound(f, 32, &tail, &order) == SSP_OK);
    CHECK(order == 1);
    CHECK(std::isinf(tail));
    ssp_function_free(f);
}

TEST_CASE("wave solution handles") {
    std::vector<double> one = {1};
    ssp_function* f0 = nullptr;
    REQUIRE(ssp_function_create("sine_mode", one.data(), 1, 0.0, 1.0, &f0) == SSP_OK);
    std::vector<double> zero = {0};
    ssp_function* g0 = nullptr;
    REQUIRE(ssp_function_create("constant", zero.data(), 1, 0.0, 1.0, &g0) == SSP_OK);

    ssp_solution* sol = nullptr;
    REQUIRE(ssp_solve(f0, g0, 1.0, 1.0, 8, &sol) == SSP_OK);
    double v = 0.0;
    CHECK(ssp_solution_eval(sol, 0.5, 0.0, &v) == SSP_OK);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ssp_solution_eval(sol, 1.0, 0.37, &v) == SSP_OK);
    CHECK(v == 0.0);

    double K = 0.0, L = 0.0;
    CHECK(ssp_solution_mode(sol, 1, &K, &L) == SSP_OK);
    CHECK(K == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ssp_solution_mode(sol, 9, &K, &L) == SSP_ERR_ARG);

    double c = 0.0;
    CHECK(ssp_solution_curvature(sol, 0.25, 0.0, &c) == SSP_OK);
    CHECK(c == doctest::Approx(-M_PI * M_PI * std::sin(M_PI * 0.25)).epsilon(1e-9));

    double e = 0.0;
    CHECK(ssp_solution_energy(sol, 0.5, &e) == SSP_OK);
    CHECK(e == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-10));

    double r = 0.0;
    CHECK(ssp_solution_residual(sol, 9, 3, 0.0, 1.0, 1e-3, &r) == SSP_OK);
    CHECK(r <= 1e-5);

    double w = 0.0;
    CHECK(ssp_dalembert(f0, g0, 1.0, 1.0, 0.5, 0.25, &w) == SSP_OK);
    CHECK(w == doctest::Approx(std::cos(M_PI * 0.25)).epsilon(1e-12));

    ssp_solution_free(sol);
    ssp_function_free(g0);
    ssp_function_free(f0);
}

TEST_CASE("unreliable estimates surface as status codes") {
    // sawtooth samples: the interpolant oscillates and the stencil estimates
    // never settle
    ssp_function* f = nullptr;
    std::vector<double> vals;
    for (int i = 0; i <= 100; ++i) vals.push_back(i % 2 == 0 ? 1.0 : 0.0);
    REQUIRE(ssp_function_create_samples(vals.data(), vals.size(), 0.0, 1.0, &f) == SSP_OK);
    double d = 0.0;
    ssp_status s = ssp_one_sided_derivative(f, 0, 2, &d);
    CHECK(s == SSP_ERR_UNRELIABLE);
    CHECK(std::string(ssp_last_error()).find("unreliable") != std::string::npos);
    ssp_function_free(f);
}
