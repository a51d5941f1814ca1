#include "stringspec.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "decompose.hpp"
#include "derivative.hpp"
#include "errors.hpp"
#include "extend.hpp"
#include "fourier.hpp"
#include "function_spec.hpp"
#include "verify.hpp"
#include "wave.hpp"

using namespace stringspec;

namespace {

thread_local std::string t_last_error;

ssp_status fail(ssp_status s, const char* what) {
    t_last_error = what ? what : "";
    return s;
}

template <typename Fn>
ssp_status guarded(Fn&& fn) {
    try {
        fn();
        return SSP_OK;
    } catch (const PreconditionError& e) {
        return fail(SSP_ERR_PRECONDITION, e.what());
    } catch (const SingularSystem& e) {
        return fail(SSP_ERR_SINGULAR, e.what());
    } catch (const UnreliableEstimate& e) {
        return fail(SSP_ERR_UNRELIABLE, e.what());
    } catch (const NonFiniteValue& e) {
        return fail(SSP_ERR_NONFINITE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SSP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SSP_ERR_INTERNAL, e.what());
    }
}

} // namespace

struct ssp_function {
    FunctionSpec fn;
};
struct ssp_extension {
    ExtensionResult ext;
};
struct ssp_decomposition {
    DecompositionResult dec;
};
struct ssp_solution {
    ModalAmplitudes sol;
    FunctionSpec f0;
    FunctionSpec g0;
};

extern "C" {

const char* ssp_version(void) { return "0.1.0"; }

const char* ssp_status_name(ssp_status s) {
    switch (s) {
        case SSP_OK: return "ok";
        case SSP_ERR_ARG: return "invalid argument";
        case SSP_ERR_PRECONDITION: return "precondition violated";
        case SSP_ERR_SINGULAR: return "singular system";
        case SSP_ERR_UNRELIABLE: return "estimate unreliable";
        case SSP_ERR_NONFINITE: return "non-finite value";
        case SSP_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* ssp_last_error(void) { return t_last_error.c_str(); }

ssp_status ssp_function_create(const char* name, const double* params, size_t n_params,
                               double left, double right, ssp_function** out) {
    if (!name || !out || (n_params > 0 && !params)) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        FunctionSpec f = make_registered(name, std::span<const double>(params, n_params),
                                         Interval{left, right});
        *out = new ssp_function{std::move(f)};
    });
}

ssp_status ssp_function_create_samples(const double* values, size_t count, double left,
                                       double right, ssp_function** out) {
    if (!values || !out) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::vector<double> v(values, values + count);
        *out = new ssp_function{FunctionSpec::sampled(Interval{left, right}, std::move(v))};
    });
}

ssp_status ssp_function_eval(const ssp_function* f, double x, double* value) {
    if (!f || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = f->fn(x); });
}

ssp_status ssp_function_sample(const ssp_function* f, size_t n_points, double* values) {
    if (!f || !values) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        FunctionSpec s = sample(f->fn, n_points);
        const auto& v = s.values();
        std::memcpy(values, v.data(), v.size() * sizeof(double));
    });
}

ssp_status ssp_one_sided_derivative(const ssp_function* f, int right_end, int order,
                                    double* value) {
    if (!f || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        *value = one_sided_derivative(f->fn, right_end ? Endpoint::right : Endpoint::left, order);
    });
}

void ssp_function_free(ssp_function* f) { delete f; }

ssp_status ssp_extend_odd(const ssp_function* f, ssp_extension** out) {
    if (!f || !out) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new ssp_extension{odd_extend(f->fn)}; });
}

ssp_status ssp_extend_even(const ssp_function* f, ssp_extension** out) {
    if (!f || !out) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new ssp_extension{even_extend(f->fn)}; });
}

ssp_status ssp_extend_composed(const ssp_function* f, int order, ssp_extension** out) {
    if (!f || !out) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new ssp_extension{compose_extension(f->fn, order)}; });
}

ssp_status ssp_extension_eval(const ssp_extension* e, double x, double* value) {
    if (!e || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = e->ext.h(x); });
}

ssp_status ssp_extension_parity(const ssp_extension* e, ssp_parity* parity) {
    if (!e || !parity) return fail(SSP_ERR_ARG, "null argument");
    switch (e->ext.parity) {
        case Parity::odd: *parity = SSP_PARITY_ODD; break;
        case Parity::even: *parity = SSP_PARITY_EVEN; break;
        case Parity::mixed: *parity = SSP_PARITY_MIXED; break;
    }
    return SSP_OK;
}

ssp_status ssp_extension_seam_class(const ssp_extension* e, int seam, int* k) {
    if (!e || !k || seam < 0 || seam > 1) return fail(SSP_ERR_ARG, "seam must be 0 or 1");
    *k = e->ext.seams[static_cast<std::size_t>(seam)].cls;
    return SSP_OK;
}

ssp_status ssp_extension_seam_detail(const ssp_extension* e, int seam, int max_order,
                                     double* from_left, double* from_right) {
    if (!e || !from_left || !from_right || seam < 0 || seam > 1 || max_order < 0)
        return fail(SSP_ERR_ARG, "bad seam detail request");
    return guarded([&] {
        auto reports = seam_smoothness(e->ext, max_order, 1e-5);
        const auto& rep = reports[static_cast<std::size_t>(seam)];
        for (int j = 0; j <= max_order; ++j) {
            double l = 0.0, r = 0.0;
            if (j < static_cast<int>(rep.orders.size())) {
                l = rep.orders[static_cast<std::size_t>(j)].from_left;
                r = rep.orders[static_cast<std::size_t>(j)].from_right;
            }
            from_left[j] = l;
            from_right[j] = r;
        }
    });
}

void ssp_extension_free(ssp_extension* e) { delete e; }

ssp_status ssp_parity_check(const ssp_function* h, ssp_parity* parity, double* deviation) {
    if (!h || !parity) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        ParityReport rep = parity_check(h->fn);
        switch (rep.klass) {
            case Parity::odd: *parity = SSP_PARITY_ODD; break;
            case Parity::even: *parity = SSP_PARITY_EVEN; break;
            case Parity::mixed: *parity = SSP_PARITY_MIXED; break;
        }
        if (deviation) *deviation = rep.deviation;
    });
}

ssp_status ssp_decompose(const ssp_function* f, int order, ssp_decomposition** out) {
    if (!f || !out) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new ssp_decomposition{decompose(f->fn, order)}; });
}

ssp_status ssp_decomposition_f1(const ssp_decomposition* d, double* coeffs, size_t capacity,
                                size_t* count) {
    if (!d || !count) return fail(SSP_ERR_ARG, "null argument");
    const auto& c = d->dec.f1.coefficients();
    *count = c.size();
    if (coeffs) {
        if (capacity < c.size()) return fail(SSP_ERR_ARG, "capacity too small");
        std::memcpy(coeffs, c.data(), c.size() * sizeof(double));
    }
    return SSP_OK;
}

ssp_status ssp_decomposition_residual(const ssp_decomposition* d, double* value) {
    if (!d || !value) return fail(SSP_ERR_ARG, "null argument");
    double worst = 0.0;
    for (const auto& m : d->dec.matched) worst = std::max(worst, std::fabs(m.remainder_estimate));
    *value = worst;
    return SSP_OK;
}

ssp_status ssp_decomposition_condition(const ssp_decomposition* d, double* value) {
    if (!d || !value) return fail(SSP_ERR_ARG, "null argument");
    *value = d->dec.condition;
    return SSP_OK;
}

ssp_status ssp_decomposition_f2_eval(const ssp_decomposition* d, double x, double* value) {
    if (!d || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = d->dec.f2(x); });
}

void ssp_decomposition_free(ssp_decomposition* d) { delete d; }

ssp_status ssp_boundary_determinant(int order, double length, double* det, double* condition) {
    if (!det) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        BoundaryMatrix bm = build_boundary_matrix(order, length);
        *det = bm.det;
        if (condition) *condition = bm.condition;
    });
}

ssp_status ssp_sine_coefficient(const ssp_function* f, int mode, double* value) {
    if (!f || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = sine_coefficient(f->fn, mode); });
}

ssp_status ssp_coefficient_table(const ssp_function* f, int extend_order, int bound_order,
                                 int max_mode, double* values, double* bounds, double* ratios) {
    if (!f) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        ExtensionResult g = compose_extension(f->fn, extend_order);
        DecayBound bound = decay_bound(g, bound_order);
        auto rows = coefficient_table(f->fn, max_mode, bound);
        for (const auto& r : rows) {
            std::size_t i = static_cast<std::size_t>(r.mode - 1);
            if (values) values[i] = r.value;
            if (bounds) bounds[i] = r.bound;
            if (ratios) ratios[i] = r.measured_ratio;
        }
    });
}

ssp_status ssp_uniform_error(const ssp_function* f, int truncation, double* sup_error) {
    if (!f || !sup_error) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *sup_error = uniform_error(f->fn, truncation); });
}

ssp_status ssp_uniform_error_jittered(const ssp_function* f, int truncation,
                                      unsigned long long seed, double* sup_error) {
    if (!f || !sup_error) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        *sup_error = uniform_error(f->fn, truncation, 1025, static_cast<std::uint64_t>(seed));
    });
}

ssp_status ssp_sine_tail_bound(const ssp_function* f, int truncation, double* value, int* order) {
    if (!f || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        TailBound t = sine_tail_bound(f->fn, truncation);
        *value = t.value;
        if (order) *order = t.order;
    });
}

ssp_status ssp_decay_slope(const ssp_function* f, int m_lo, int m_hi, double* slope) {
    if (!f || !slope) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        std::vector<CoefficientRow> rows;
        for (int m = m_lo; m <= m_hi; ++m) {
            CoefficientRow r;
            r.mode = m;
            r.value = sine_coefficient(f->fn, m);
            rows.push_back(r);
        }
        *slope = decay_slope(rows, m_lo, m_hi);
    });
}

ssp_status ssp_solve(const ssp_function* f0, const ssp_function* g0, double tension,
                     double density, int truncation, ssp_solution** out) {
    if (!f0 || !g0 || !out) return fail(SSP_ERR_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        WaveParams p{tension, density, f0->fn.domain().right};
        ModalAmplitudes sol = solve(f0->fn, g0->fn, p, truncation);
        *out = new ssp_solution{std::move(sol), f0->fn, g0->fn};
    });
}

ssp_status ssp_solution_eval(const ssp_solution* s, double x, double t, double* value) {
    if (!s || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = evaluate(s->sol, x, t); });
}

ssp_status ssp_solution_curvature(const ssp_solution* s, double x, double t, double* value) {
    if (!s || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = evaluate_xx(s->sol, x, t); });
}

ssp_status ssp_solution_mode(const ssp_solution* s, int m, double* cos_amp, double* sin_amp) {
    if (!s) return fail(SSP_ERR_ARG, "null argument");
    if (m < 1 || m > s->sol.truncation()) return fail(SSP_ERR_ARG, "mode out of range");
    if (cos_amp) *cos_amp = s->sol.cos_amp[static_cast<std::size_t>(m - 1)];
    if (sin_amp) *sin_amp = s->sol.sin_amp[static_cast<std::size_t>(m - 1)];
    return SSP_OK;
}

ssp_status ssp_solution_energy(const ssp_solution* s, double t, double* value) {
    if (!s || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] { *value = energy(s->sol, t); });
}

ssp_status ssp_solution_residual(const ssp_solution* s, size_t nx, size_t nt, double t0,
                                 double t1, double h, double* value) {
    if (!s || !value || nx < 2 || nt < 2) return fail(SSP_ERR_ARG, "bad mesh");
    return guarded([&] {
        ResidualMesh mesh{nx, nt, t0, t1};
        *value = residual(s->sol, mesh, h);
    });
}

void ssp_solution_free(ssp_solution* s) { delete s; }

ssp_status ssp_dalembert(const ssp_function* f0, const ssp_function* g0, double tension,
                         double density, double x, double t, double* value) {
    if (!f0 || !g0 || !value) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        WaveParams p{tension, density, f0->fn.domain().right};
        *value = dalembert_oracle(f0->fn, g0->fn, p, x, t);
    });
}

ssp_status ssp_verify(ssp_verify_callback cb, void* user, int* all_passed) {
    if (!all_passed) return fail(SSP_ERR_ARG, "null argument");
    return guarded([&] {
        auto results = run_acceptance();
        int ok = 1;
        for (const auto& r : results) {
            if (!r.passed) ok = 0;
            if (cb) cb(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        }
        *all_passed = ok;
    });
}

} // extern "C"
