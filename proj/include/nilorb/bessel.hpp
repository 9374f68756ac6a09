// Modified Bessel functions of the second kind for integer and half-integer order.
#pragma once

#include "nilorb/numeric.hpp"

#include <cmath>

namespace nilorb {

/// A nonnegative integer or half-integer order, stored as twice its value.
class BesselOrder {
public:
    explicit BesselOrder(int twice) : twice_(twice) {
        if (twice < 0) throw std::domain_error("BesselOrder: order must be nonnegative");
    }
    explicit BesselOrder(const Rational& v) {
        if (v < 0 || (den(v) != 1 && den(v) != 2))
            throw std::domain_error("BesselOrder: order must be a nonnegative integer or half-integer");
        twice_ = static_cast<int>(num(v) * (2 / den(v)));
    }
    static BesselOrder integer(int n) { return BesselOrder(2 * n); }

    bool is_integer() const { return twice_ % 2 == 0; }
    int twice() const { return twice_; }
    double value() const { return twice_ / 2.0; }

private:
    int twice_;
};

namespace detail {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// K_0 and K_1 by power series, 0 < x < 2.
inline void bessel_k01_series(double x, double& k0, double& k1) {
    const double t = x * x / 4.0;
    const double lg = std::log(x / 2.0);
    double f0 = 1.0;   // t^k / (k!)^2
    double f1 = 1.0;   // t^k / (k! (k+1)!)
    double h = 0.0;    // H_k
    double i0 = 1.0;
    double i1 = 1.0;
    double s0 = 0.0;
    double s1 = 1.0 - 2.0 * kEulerGamma;
    for (int k = 1; k < 200; ++k) {
        f0 *= t / (static_cast<double>(k) * k);
        f1 *= t / (static_cast<double>(k) * (k + 1));
        h += 1.0 / k;
        i0 += f0;
        i1 += f1;
        s0 += f0 * h;
        s1 += f1 * (2.0 * h + 1.0 / (k + 1) - 2.0 * kEulerGamma);
        if (f0 < 1e-18 * i0) break;
    }
    k0 = -(lg + kEulerGamma) * i0 + s0;
    k1 = 1.0 / x + lg * (x / 2.0) * i1 - (x / 4.0) * s1;
}

// Scaled e^x K_0, e^x K_1 by the Temme/Thompson-Barnett continued fraction, x >= 2.
inline void bessel_k01_cf2_scaled(double x, double& ek0, double& ek1) {
    constexpr double eps = 1e-16;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps) break;
    }
    h = a1 * h;
    ek0 = std::sqrt(M_PI / (2.0 * x)) / s;
    ek1 = ek0 * (x + 0.5 - h) / x;
}

}  // namespace detail

/// e^x K_nu(x); keeps the exponential decay out of the dynamic range.
inline double bessel_k_scaled(BesselOrder order, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: argument must be positive");
    const int t = order.twice();
    if (order.is_integer()) {
        double ek0, ek1;
        if (x < 2.0) {
            detail::bessel_k01_series(x, ek0, ek1);
            const double ex = std::exp(x);
            ek0 *= ex;
            ek1 *= ex;
        } else {
            detail::bessel_k01_cf2_scaled(x, ek0, ek1);
        }
        const int n = t / 2;
        if (n == 0) return ek0;
        double km = ek0, k = ek1;
        for (int j = 1; j < n; ++j) {
            const double kp = km + (2.0 * j / x) * k;
            km = k;
            k = kp;
        }
        return k;
    }
    // Half-integer orders close exactly.
    const double base = std::sqrt(M_PI / (2.0 * x));
    if (t == 1) return base;
    double km = base, k = base * (1.0 + 1.0 / x);
    for (int j = 3; j < t; j += 2) {
        const double kp = km + (static_cast<double>(j) / x) * k;
        km = k;
        k = kp;
    }
    return k;
}

/// K_nu(x). Degenerates to exactly 0.0 once e^(-x) underflows (x beyond ~745).
inline double bessel_k(BesselOrder order, double x) {
    const double scaled = bessel_k_scaled(order, x);
    const double damp = std::exp(-x);
    return scaled * damp;
}

}  // namespace nilorb
