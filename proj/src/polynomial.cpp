#include "polynomial.hpp"

#include <cmath>

#include "errors.hpp"

namespace stringspec {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw PreconditionError("polynomial coefficients must be finite");
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const { return static_cast<double>(eval_ld(x)); }

long double Polynomial::eval_ld(long double x) const {
    long double acc = 0.0L;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + static_cast<long double>(coeffs_[i]);
    return acc;
}

Polynomial Polynomial::derivative(int k) const {
    std::vector<long double> c(coeffs_.begin(), coeffs_.end());
    for (int pass = 0; pass < k; ++pass) {
        if (c.empty()) break;
        std::vector<long double> d(c.size() > 1 ? c.size() - 1 : 0);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long double>(i);
        c = std::move(d);
    }
    std::vector<double> out(c.begin(), c.end());
    return Polynomial(std::move(out));
}

double Polynomial::derivative_at(double x, int k) const {
    return derivative(k)(x);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    trim();
    return *this;
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool Polynomial::is_zero(double tol) const {
    for (double c : coeffs_)
        if (std::fabs(c) > tol) return false;
    return true;
}

FunctionSpec Polynomial::as_function(Interval dom) const {
    std::vector<long double> c(coeffs_.begin(), coeffs_.end());
    return FunctionSpec::closed_form_ld(dom, [c](long double x) {
        long double acc = 0.0L;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    });
}

} // namespace stringspec
