#include "extend.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace stringspec {

namespace {

double function_scale(const FunctionSpec& f) {
    Interval dom = f.domain();
    double s = 0.0;
    for (int i = 0; i <= 64; ++i) {
        double x = dom.left + dom.length() * i / 64.0;
        s = std::max(s, std::fabs(f(x)));
    }
    return s;
}

void require_vanishing_endpoints(const FunctionSpec& f, double endpoint_tol) {
    Interval dom = f.domain();
    double scale = function_scale(f);
    double tol = endpoint_tol * (1.0 + scale);
    double v0 = f(dom.left), vL = f(dom.right);
    if (std::fabs(v0) > tol || std::fabs(vL) > tol) {
        std::ostringstream msg;
        msg << "extension requires f to vanish at both endpoints: f(" << dom.left << ") = " << v0
            << ", f(" << dom.right << ") = " << vL << " (tolerance " << tol << ")";
        throw PreconditionError(msg.str());
    }
}

// Seam derivative comparisons for a function on [-L, L] with endpoints
// identified. Seam 0 compares x->0- against x->0+; seam 1 compares x->L-
// against x->(-L)+. `span` is the length of one smooth piece (L).
SeamReport check_seam(const FunctionSpec& h, int seam, int max_order, double tol) {
    Interval dom = h.domain();
    double piece = dom.right; // L
    auto eval = [&h](long double x) { return h.eval_ld(x); };
    SeamReport rep;
    rep.seam = seam;
    bool prefix_intact = true;
    for (int order = 0; order <= max_order; ++order) {
        double xl = (seam == 0) ? 0.0 : dom.right;
        double xr = (seam == 0) ? 0.0 : dom.left;
        DerivativeEstimate a = one_sided_estimate(eval, xl, -1, order, piece);
        DerivativeEstimate b = one_sided_estimate(eval, xr, +1, order, piece);
        SeamOrderCheck chk;
        chk.order = order;
        chk.from_left = a.value;
        chk.from_right = b.value;
        chk.est_error = std::max(a.error, b.error);
        double mag = std::max(std::fabs(a.value), std::fabs(b.value));
        double gate = tol * (1.0 + mag);
        chk.indeterminate = chk.est_error > gate;
        chk.matched = !chk.indeterminate && std::fabs(a.value - b.value) <= gate;
        rep.orders.push_back(chk);
        // the class counts the matched prefix; later orders are still
        // estimated so reports show where and how the matching breaks
        if (!chk.matched) prefix_intact = false;
        if (prefix_intact) rep.cls = order;
    }
    return rep;
}

ExtensionResult extend_impl(const FunctionSpec& f, bool odd, int max_order, double seam_tol,
                            double endpoint_tol) {
    Interval dom = f.domain();
    if (dom.left != 0.0) throw PreconditionError("extension expects a domain [0, L]");
    require_vanishing_endpoints(f, endpoint_tol);

    double L = dom.right;
    Interval edom{-L, L};
    FunctionSpec h = FunctionSpec::closed_form_ld(
        edom,
        [f, odd](long double x) -> long double {
            if (x >= 0.0L) return f.eval_ld(x);
            return odd ? -f.eval_ld(-x) : f.eval_ld(-x);
        },
        f.claimed_smoothness());

    ExtensionResult out{std::move(h), odd ? Parity::odd : Parity::even, {}};
    int cap = (max_order >= 0) ? max_order : std::min(f.claimed_smoothness(), 4);
    out.seams = seam_smoothness(out, cap, seam_tol);
    return out;
}

} // namespace

ExtensionResult odd_extend(const FunctionSpec& f, int max_order, double seam_tol,
                           double endpoint_tol) {
    return extend_impl(f, true, max_order, seam_tol, endpoint_tol);
}

ExtensionResult even_extend(const FunctionSpec& f, int max_order, double seam_tol,
                            double endpoint_tol) {
    return extend_impl(f, false, max_order, seam_tol, endpoint_tol);
}

std::array<SeamReport, 2> seam_smoothness(const ExtensionResult& ext, int max_order, double tol) {
    if (max_order > 4) throw PreconditionError("seam_smoothness: max_order must be <= 4");
    return {check_seam(ext.h, 0, max_order, tol), check_seam(ext.h, 1, max_order, tol)};
}

ParityReport parity_check(const FunctionSpec& h, double tol) {
    Interval dom = h.domain();
    if (dom.left != -dom.right) throw PreconditionError("parity_check expects a domain [-L, L]");
    constexpr int kProbe = 257;
    double dev_odd = 0.0, dev_even = 0.0, scale = 0.0;
    for (int i = 0; i < kProbe; ++i) {
        double x = dom.right * static_cast<double>(i) / (kProbe - 1);
        double a = h(x), b = h(-x);
        dev_odd = std::max(dev_odd, std::fabs(b + a));
        dev_even = std::max(dev_even, std::fabs(b - a));
        scale = std::max(scale, std::fabs(a));
    }
    ParityReport rep;
    rep.deviation_odd = dev_odd;
    rep.deviation_even = dev_even;
    double gate = tol * (1.0 + scale);
    if (dev_odd <= gate && dev_odd <= dev_even) {
        rep.klass = Parity::odd;
        rep.deviation = dev_odd;
    } else if (dev_even <= gate) {
        rep.klass = Parity::even;
        rep.deviation = dev_even;
    } else {
        rep.klass = Parity::mixed;
        rep.deviation = std::min(dev_odd, dev_even);
    }
    return rep;
}

} // namespace stringspec
