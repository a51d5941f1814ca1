#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace stringspec {

/// sin(pi*y) with exact zeros at integer y. Reduces y to [-0.5, 0.5] against
/// the nearest integer before calling libm, so large mode*position arguments
/// do not lose the periodic structure.
inline double sin_pi(double y) {
    double n = std::nearbyint(y);
    double r = y - n;
    double s = std::sin(M_PI * r);
    // odd integer shift flips the sign
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

inline double cos_pi(double y) {
    double n = std::nearbyint(y);
    double r = y - n;
    double c = std::cos(M_PI * r);
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -c : c;
}

inline long double sin_pi_ld(long double y) {
    long double n = std::nearbyint(y);
    long double r = y - n;
    long double s = std::sin(M_PIl * r);
    return (std::fmod(std::fabs(n), 2.0L) == 1.0L) ? -s : s;
}

inline long double cos_pi_ld(long double y) {
    long double n = std::nearbyint(y);
    long double r = y - n;
    long double c = std::cos(M_PIl * r);
    return (std::fmod(std::fabs(n), 2.0L) == 1.0L) ? -c : c;
}

/// Neumaier-compensated accumulator.
template <typename T = double>
class CompensatedSum {
public:
    void add(T term) {
        T t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_ = 0;
    T comp_ = 0;
};

inline double compensated_sum(std::span<const double> terms) {
    CompensatedSum<double> acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

/// Least-squares slope of y over x (no intercept returned).
inline double fit_slope(std::span<const double> x, std::span<const double> y) {
    std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double d = static_cast<double>(n) * sxx - sx * sx;
    return (static_cast<double>(n) * sxy - sx * sy) / d;
}

} // namespace stringspec
