#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace ptmom {

/// Closed-form root finders for low-degree polynomials with real
/// coefficients. All roots are returned, complex ones included; quartic
/// roots are polished with a few Newton steps so that residuals on
/// well-conditioned inputs sit near machine precision.

/// Roots of a*x^2 + b*x + c, a != 0.
inline std::array<std::complex<double>, 2> solve_quadratic(double a, double b, double c) {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
        // Avoid cancellation: compute the large-magnitude root first.
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
        const double r0 = q / a;
        const double r1 = (q != 0.0) ? c / q : -b / a - r0;
        return {std::complex<double>(r0, 0.0), std::complex<double>(r1, 0.0)};
    }
    const double re = -b / (2.0 * a);
    const double im = std::sqrt(-disc) / (2.0 * a);
    return {std::complex<double>(re, im), std::complex<double>(re, -im)};
}

/// Roots of a*x^3 + b*x^2 + c*x + d, a != 0.
inline std::array<std::complex<double>, 3> solve_cubic(double a, double b, double c,
                                                       double d) {
    const double b1 = b / a;
    const double c1 = c / a;
    const double d1 = d / a;

    // Depressed form t^3 + p t + q with x = t - b1/3.
    const double shift = b1 / 3.0;
    const double p = c1 - b1 * b1 / 3.0;
    const double q = 2.0 * b1 * b1 * b1 / 27.0 - b1 * c1 / 3.0 + d1;

    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;

    std::array<std::complex<double>, 3> roots;
    if (disc > 0.0) {
        // One real root, one conjugate pair.
        const double sq = std::sqrt(disc);
        const double u = std::cbrt(-half_q + sq);
        const double v = std::cbrt(-half_q - sq);
        const double t0 = u + v;
        const double re = -0.5 * t0;
        const double im = 0.5 * std::sqrt(3.0) * (u - v);
        roots[0] = std::complex<double>(t0 - shift, 0.0);
        roots[1] = std::complex<double>(re - shift, im);
        roots[2] = std::complex<double>(re - shift, -im);
    } else if (p == 0.0) {
        // Triple root.
        const double t = std::cbrt(-q);
        roots.fill(std::complex<double>(t - shift, 0.0));
    } else {
        // Three real roots (trigonometric form).
        const double r = std::sqrt(-third_p);
        double cos_arg = -half_q / (r * r * r);
        cos_arg = std::clamp(cos_arg, -1.0, 1.0);
        const double phi = std::acos(cos_arg);
        for (int k = 0; k < 3; ++k)
            roots[k] = std::complex<double>(
                2.0 * r * std::cos((phi - 2.0 * M_PI * k) / 3.0) - shift, 0.0);
    }
    return roots;
}

namespace detail {

inline std::complex<double> quartic_eval(const std::array<double, 5>& m,
                                         std::complex<double> x) {
    // m holds monic coefficients {1, b, c, d, e}.
    return (((x + m[1]) * x + m[2]) * x + m[3]) * x + m[4];
}

inline std::complex<double> quartic_deriv(const std::array<double, 5>& m,
                                          std::complex<double> x) {
    return ((4.0 * x + 3.0 * m[1]) * x + 2.0 * m[2]) * x + m[3];
}

inline std::complex<double> newton_polish(const std::array<double, 5>& m,
                                          std::complex<double> x) {
    for (int it = 0; it < 4; ++it) {
        const std::complex<double> f = quartic_eval(m, x);
        const std::complex<double> df = quartic_deriv(m, x);
        if (std::abs(df) < 1e-300) break;
        const std::complex<double> step = f / df;
        x -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
    }
    return x;
}

} // namespace detail

/// Roots of a*x^4 + b*x^3 + c*x^2 + d*x + e, a != 0 (Ferrari with a
/// resolvent cubic, then Newton polishing on the monic quartic).
inline std::array<std::complex<double>, 4> solve_quartic(double a, double b, double c,
                                                         double d, double e) {
    const double b1 = b / a;
    const double c1 = c / a;
    const double d1 = d / a;
    const double e1 = e / a;
    const std::array<double, 5> monic{1.0, b1, c1, d1, e1};

    // Depressed quartic y^4 + p y^2 + q y + r, x = y - b1/4.
    const double shift = b1 / 4.0;
    const double b2 = b1 * b1;
    const double p = c1 - 3.0 * b2 / 8.0;
    const double q = d1 - b1 * c1 / 2.0 + b2 * b1 / 8.0;
    const double r = e1 - b1 * d1 / 4.0 + b2 * c1 / 16.0 - 3.0 * b2 * b2 / 256.0;

    std::array<std::complex<double>, 4> roots;
    const double scale = std::max({std::abs(p), std::abs(q), std::abs(r), 1.0});

    if (std::abs(q) <= 1e-14 * scale) {
        // Biquadratic: y^2 solves z^2 + p z + r.
        const auto z = solve_quadratic(1.0, p, r);
        const auto y0 = std::sqrt(z[0]);
        const auto y1 = std::sqrt(z[1]);
        roots = {y0, -y0, y1, -y1};
    } else {
        // Resolvent cubic 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0; any real
        // root with 2m > 0 splits the quartic into two quadratics.
        const auto ms = solve_cubic(8.0, 8.0 * p, 2.0 * p * p - 8.0 * r, -q * q);
        double m = 0.0;
        bool found = false;
        for (const auto& cand : ms) {
            if (std::abs(cand.imag()) <= 1e-10 * (1.0 + std::abs(cand.real())) &&
                cand.real() > 0.0) {
                if (!found || cand.real() > m) m = cand.real();
                found = true;
            }
        }
        if (!found) {
            // Fall back to the real part of the largest root; polishing
            // below recovers the accuracy.
            for (const auto& cand : ms) m = std::max(m, cand.real());
            m = std::max(m, 1e-30);
        }
        const double s = std::sqrt(2.0 * m);
        const double t = q / (2.0 * s); // equals q / (4m) * s
        // y^2 - s y + (p/2 + m + t) = 0 and y^2 + s y + (p/2 + m - t) = 0.
        const auto q1 = solve_quadratic(1.0, -s, p / 2.0 + m + t);
        const auto q2 = solve_quadratic(1.0, s, p / 2.0 + m - t);
        roots = {q1[0], q1[1], q2[0], q2[1]};
    }

    for (auto& y : roots) y -= shift;
    for (auto& x : roots) x = detail::newton_polish(monic, x);
    return roots;
}

} // namespace ptmom
