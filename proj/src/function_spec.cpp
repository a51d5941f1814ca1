#include "function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "numeric.hpp"

namespace stringspec {

bool Interval::valid() const {
    return std::isfinite(left) && std::isfinite(right) && left < right;
}

struct FunctionSpec::State {
    Interval domain;
    int claimed_smoothness = 0;
    Eval eval;
    EvalLd eval_ld; // may be empty
    std::vector<double> values; // empty for closed forms
};

namespace {

void check_domain(const Interval& dom) {
    if (!dom.valid()) throw PreconditionError("invalid interval: left must be < right and finite");
}

// Local Lagrange interpolation through a window of grid points. Window width 6
// matches the accuracy the finite-difference stencils assume of sampled data.
double interpolate_samples(const std::vector<double>& v, const Interval& dom, double x) {
    const std::size_t n = v.size();
    const double h = dom.length() / static_cast<double>(n - 1);
    const std::size_t width = std::min<std::size_t>(6, n);
    double u = (x - dom.left) / h;
    auto i0 = static_cast<long>(std::floor(u)) - static_cast<long>(width) / 2 + 1;
    i0 = std::clamp<long>(i0, 0, static_cast<long>(n - width));
    CompensatedSum<double> acc;
    for (std::size_t j = 0; j < width; ++j) {
        double lj = 1.0;
        for (std::size_t k = 0; k < width; ++k) {
            if (k == j) continue;
            lj *= (u - static_cast<double>(i0 + static_cast<long>(k))) /
                  (static_cast<double>(j) - static_cast<double>(k));
        }
        acc.add(lj * v[static_cast<std::size_t>(i0) + j]);
    }
    return acc.value();
}

} // namespace

FunctionSpec FunctionSpec::closed_form(Interval dom, Eval f, int claimed_smoothness) {
    check_domain(dom);
    auto s = std::make_shared<State>();
    s->domain = dom;
    s->claimed_smoothness = claimed_smoothness;
    s->eval = std::move(f);
    FunctionSpec out;
    out.state_ = std::move(s);
    return out;
}

FunctionSpec FunctionSpec::closed_form_ld(Interval dom, EvalLd f, int claimed_smoothness) {
    check_domain(dom);
    auto s = std::make_shared<State>();
    s->domain = dom;
    s->claimed_smoothness = claimed_smoothness;
    s->eval_ld = std::move(f);
    s->eval = [g = s->eval_ld](double x) { return static_cast<double>(g(x)); };
    FunctionSpec out;
    out.state_ = std::move(s);
    return out;
}

FunctionSpec FunctionSpec::sampled(Interval dom, std::vector<double> values, int claimed_smoothness) {
    check_domain(dom);
    if (values.size() < 2) throw PreconditionError("sampled function needs at least 2 points");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i]))
            throw NonFiniteValue(dom.left + dom.length() * static_cast<double>(i) /
                                                static_cast<double>(values.size() - 1));
    auto s = std::make_shared<State>();
    s->domain = dom;
    s->claimed_smoothness = claimed_smoothness;
    s->values = std::move(values);
    FunctionSpec out;
    out.state_ = std::move(s);
    return out;
}

double FunctionSpec::operator()(double x) const {
    if (!state_->values.empty()) return interpolate_samples(state_->values, state_->domain, x);
    return state_->eval(x);
}

long double FunctionSpec::eval_ld(long double x) const {
    if (state_->eval_ld) return state_->eval_ld(x);
    return (*this)(static_cast<double>(x));
}

Interval FunctionSpec::domain() const { return state_->domain; }
int FunctionSpec::claimed_smoothness() const { return state_->claimed_smoothness; }
bool FunctionSpec::is_sampled() const { return !state_->values.empty(); }
const std::vector<double>& FunctionSpec::values() const { return state_->values; }

double FunctionSpec::grid_step() const {
    if (!is_sampled()) throw PreconditionError("grid_step on a closed-form function");
    return state_->domain.length() / static_cast<double>(state_->values.size() - 1);
}

bool FunctionSpec::has_ld_path() const { return static_cast<bool>(state_->eval_ld); }

FunctionSpec sample(const FunctionSpec& f, std::size_t n_points) {
    if (n_points < 2) throw PreconditionError("sample: need at least 2 points");
    Interval dom = f.domain();
    std::vector<double> v(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        double x = dom.left + dom.length() * static_cast<double>(i) / static_cast<double>(n_points - 1);
        if (i == n_points - 1) x = dom.right;
        double y = f(x);
        if (!std::isfinite(y)) throw NonFiniteValue(x);
        v[i] = y;
    }
    // sampling drops the derivative-evaluability claim; callers reassert it
    return FunctionSpec::sampled(dom, std::move(v), 0);
}

namespace {

double mode_length(const Interval& dom) {
    // symmetric interval [-L, L]: mode index is relative to the half width
    if (dom.left == -dom.right) return dom.right;
    return dom.length();
}

FunctionSpec make_poly_fn(std::span<const double> coeffs, Interval dom) {
    std::vector<long double> c(coeffs.begin(), coeffs.end());
    return FunctionSpec::closed_form_ld(dom, [c](long double x) {
        long double acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    });
}

} // namespace

FunctionSpec make_registered(const std::string& name, std::span<const double> params, Interval dom) {
    if (!dom.valid()) throw PreconditionError("invalid interval");
    if (name == "poly") {
        if (params.empty()) throw PreconditionError("poly: needs at least one coefficient");
        return make_poly_fn(params, dom);
    }
    if (name == "constant") {
        if (params.size() != 1) throw PreconditionError("constant: needs exactly one parameter");
        long double c = params[0];
        return FunctionSpec::closed_form_ld(dom, [c](long double) { return c; });
    }
    if (name == "sine_mode" || name == "cosine_mode") {
        if (params.empty() || params.size() > 2)
            throw PreconditionError(name + ": params are {mode[, amplitude]}");
        long double m = params[0];
        long double amp = params.size() > 1 ? params[1] : 1.0L;
        long double len = mode_length(dom);
        long double a = (dom.left == -dom.right) ? 0.0L : static_cast<long double>(dom.left);
        bool is_sin = (name == "sine_mode");
        return FunctionSpec::closed_form_ld(dom, [m, amp, len, a, is_sin](long double x) {
            long double y = m * (x - a) / len;
            return amp * (is_sin ? sin_pi_ld(y) : cos_pi_ld(y));
        });
    }
    if (name == "one_minus_cos") {
        if (params.empty() || params.size() > 2)
            throw PreconditionError("one_minus_cos: params are {k[, amplitude]}");
        long double k = params[0];
        long double amp = params.size() > 1 ? params[1] : 1.0L;
        long double len = mode_length(dom);
        long double a = (dom.left == -dom.right) ? 0.0L : static_cast<long double>(dom.left);
        return FunctionSpec::closed_form_ld(dom, [k, amp, len, a](long double x) {
            return amp * (1.0L - cos_pi_ld(2.0L * k * (x - a) / len));
        });
    }
    throw PreconditionError("unknown registry function: " + name);
}

bool registry_has(const std::string& name) {
    return name == "poly" || name == "constant" || name == "sine_mode" ||
           name == "cosine_mode" || name == "one_minus_cos";
}

} // namespace stringspec
