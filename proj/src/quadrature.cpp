#include "quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace stringspec {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t panels) {
    const std::size_t n = 2 * panels; // subintervals
    const double h = (b - a) / static_cast<double>(n);
    CompensatedSum<double> acc;
    acc.add(f(a));
    acc.add(f(b));
    for (std::size_t i = 1; i < n; ++i) {
        double x = a + h * static_cast<double>(i);
        acc.add((i % 2 == 1 ? 4.0 : 2.0) * f(x));
    }
    return acc.value() * h / 3.0;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, std::size_t min_panels, std::size_t max_panels) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0, true};
        QuadratureResult r = integrate(f, b, a, rel_tol, min_panels, max_panels);
        r.value = -r.value;
        return r;
    }
    std::size_t n = std::max<std::size_t>(min_panels, 4);
    double prev = simpson(f, a, b, n);
    QuadratureResult out;
    while (n <= max_panels) {
        n *= 2;
        double cur = simpson(f, a, b, n);
        double rich = cur + (cur - prev) / 15.0;
        double err = std::fabs(cur - prev) / 15.0;
        out.value = rich;
        out.abs_error = err;
        out.panels = n;
        if (err <= rel_tol * (1.0 + std::fabs(rich))) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;
}

double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, std::size_t min_panels) {
    QuadratureResult r = integrate(f, a, b, rel_tol, min_panels);
    if (!r.converged) {
        std::ostringstream msg;
        msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << r.value
            << ", error " << r.abs_error << " after " << r.panels << " panels";
        throw UnreliableEstimate(msg.str());
    }
    return r.value;
}

} // namespace stringspec
