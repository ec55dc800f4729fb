#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "ptmom/eigen.hpp"
#include "ptmom/errors.hpp"
#include "ptmom/polyroots.hpp"
#include "ptmom/qmat.hpp"

namespace ptmom {

/// The universal entanglement witness W = det(rho^Gamma) together with its
/// rescaled form w = max(0, -16 W). W < 0 exactly for entangled states;
/// w = 1 on Bell states.
struct witness_value {
    double det_pt = 0.0;
    double w = 0.0;
};

enum class negativity_method { spectral, quartic_exact, quartic_clamped };

/// Result of the moment-based negativity inversion. all_roots keeps the full
/// root set of the quartic for diagnostics and for noise studies, which need
/// the raw (possibly negative) root closest to the true value.
struct negativity_result {
    double value = 0.0;
    negativity_method method = negativity_method::quartic_exact;
    std::array<std::complex<double>, 4> all_roots{};
};

/// N = 2 max(0, -min eig(rho^Gamma)).
inline double negativity_spectral(const density_matrix& rho) {
    const auto eig = hermitian_eigenvalues(partial_transpose(rho));
    return 2.0 * std::max(0.0, -eig[0]);
}

/// Wootters concurrence. The lambdas are obtained as singular values of
/// B = D^T (sigma2 x sigma2) D with rho = D D^H, which keeps them accurate
/// near zero; the usual sqrt-of-eigenvalue route loses half the digits on
/// rank-deficient states.
inline double concurrence(const density_matrix& rho) {
    const eigen_decomposition ed = hermitian_eigensystem_of(rho.matrix());
    mat4 d;
    for (int j = 0; j < 4; ++j) {
        const double lam = std::max(0.0, ed.values[j]);
        const double root = std::sqrt(lam);
        for (int r = 0; r < 4; ++r) d(r, j) = root * ed.vectors(r, j);
    }
    const mat4 b = d.transpose() * spin_flip_operator() * d;
    const auto lambda = singular_values_of(b); // descending
    const double sum = lambda[0] + lambda[1] + lambda[2] + lambda[3];
    return std::max(0.0, 2.0 * lambda[0] - sum);
}

/// Witness from moments: det(rho^Gamma) =
/// (1 - 6 pi4 + 8 pi3 + 3 pi2^2 - 6 pi2) / 24. Accepts noisy moments.
inline witness_value uwe(const moment_set& m) {
    witness_value v;
    v.det_pt = (1.0 - 6.0 * m.pi4 + 8.0 * m.pi3 + 3.0 * m.pi2 * m.pi2 - 6.0 * m.pi2) / 24.0;
    v.w = std::max(0.0, -16.0 * v.det_pt);
    return v;
}

namespace detail {

/// Coefficients of the negativity quartic
/// 3 N^4 + 6 N^3 - 6 (pi2 - 1) N^2 - 4 (3 pi2 - 2 pi3 - 1) N + 48 det = 0.
/// For exact moments its roots are exactly {-2 lambda_k} over the spectrum
/// of rho^Gamma, so the unique positive real root is the negativity.
inline std::array<std::complex<double>, 4> negativity_roots(const moment_set& m,
                                                            double det_pt) {
    return solve_quartic(3.0, 6.0, -6.0 * (m.pi2 - 1.0),
                         -4.0 * (3.0 * m.pi2 - 2.0 * m.pi3 - 1.0), 48.0 * det_pt);
}

} // namespace detail

/// Inverts the moment quartic for N. Roots with |Im| < 1e-9 lying in
/// (0, 1 + 1e-9] are admissible; with noisy moments and no admissible root
/// the nearest real root is clamped into [0,1] instead. Throws no_real_root
/// only when every root is genuinely complex (|Im| >= 1e-6).
inline negativity_result negativity_from_moments(const moment_set& m) {
    const witness_value wit = uwe(m);
    negativity_result res;
    res.all_roots = detail::negativity_roots(m, wit.det_pt);

    if (wit.det_pt >= 0.0) {
        res.value = 0.0;
        res.method = negativity_method::quartic_exact;
        return res;
    }

    bool have_admissible = false;
    double best = 0.0;
    for (const auto& r : res.all_roots) {
        if (std::abs(r.imag()) >= 1e-9) continue;
        const double x = r.real();
        if (x > 0.0 && x <= 1.0 + 1e-9) {
            if (!have_admissible || x > best) best = x;
            have_admissible = true;
        }
    }
    if (have_admissible) {
        res.value = std::clamp(best, 0.0, 1.0);
        res.method = negativity_method::quartic_exact;
        return res;
    }

    bool have_real = false;
    double nearest = 0.0;
    double nearest_dist = 0.0;
    for (const auto& r : res.all_roots) {
        if (std::abs(r.imag()) >= 1e-6) continue;
        const double x = r.real();
        const double dist = x < 0.0 ? -x : (x > 1.0 ? x - 1.0 : 0.0);
        if (!have_real || dist < nearest_dist) {
            nearest = x;
            nearest_dist = dist;
        }
        have_real = true;
    }
    if (!have_real) throw no_real_root();
    res.value = std::clamp(nearest, 0.0, 1.0);
    res.method = negativity_method::quartic_clamped;
    return res;
}

struct witness_bounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Forward polynomial of the Werner family, w(N) = N (N + 2)^3 / 27; the
/// lower bound below is its inverse on [0, 1].
inline double werner_witness_of_negativity(double n) {
    return n * (n + 2.0) * (n + 2.0) * (n + 2.0) / 27.0;
}

/// Tight bounds f(w) <= N <= w^(1/4). The lower bound is the closed-form
/// inverse of w(N) = N (N+2)^3 / 27:
///   x = 3 cbrt(2 sqrt(w^2 (16w + 1)) - 2w), y = 36 w / x,
///   z = 1 - y + x, f = (-3 + sqrt(z) + sqrt(3 - z + 2/sqrt(z))) / 2.
inline witness_bounds bounds_from_witness(double w) {
    if (w < -1e-12 || w > 1.0 + 1e-12)
        throw out_of_range("witness w outside [0, 1]", w);
    w = std::clamp(w, 0.0, 1.0);

    witness_bounds b;
    b.upper = std::pow(w, 0.25);
    if (w < 1e-300) {
        b.lower = 0.0;
        return b;
    }
    const double x = 3.0 * std::cbrt(2.0 * std::sqrt(w * w * (16.0 * w + 1.0)) - 2.0 * w);
    const double y = 36.0 * w / x;
    const double z = 1.0 - y + x;
    const double sz = std::sqrt(z);
    b.lower = 0.5 * (-3.0 + sz + std::sqrt(3.0 - z + 2.0 / sz));
    return b;
}

/// Binary entropy with the limit convention 0 log 0 = 0.
inline double binary_entropy(double y) {
    double h = 0.0;
    if (y > 0.0) h -= y * std::log2(y);
    if (y < 1.0) h -= (1.0 - y) * std::log2(1.0 - y);
    return h;
}

/// Pure-state entanglement of formation from the witness,
/// E_F = h((1 + sqrt(1 - sqrt(w))) / 2). Meaningful for pure states only.
inline double entanglement_of_formation_pure(double w) {
    if (w < -1e-12 || w > 1.0 + 1e-12)
        throw out_of_range("witness w outside [0, 1]", w);
    w = std::clamp(w, 0.0, 1.0);
    const double arg = 0.5 * (1.0 + std::sqrt(1.0 - std::sqrt(w)));
    return binary_entropy(arg);
}

} // namespace ptmom
