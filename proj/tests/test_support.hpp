#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "ptmom/ensemble.hpp"
#include "ptmom/polyroots.hpp"
#include "ptmom/ptmom.hpp"

namespace ptest {

using ptmom::cplx;
using ptmom::mat4;

/// Characteristic polynomial lambda^4 - e1 l^3 + e2 l^2 - e3 l + e4 of a 4x4
/// matrix from its trace powers (Faddeev-LeVerrier). Together with the
/// closed-form quartic solver this gives an eigenvalue oracle that shares no
/// code with the Jacobi path.
inline std::array<double, 4> charpoly_esym(const mat4& a) {
    const mat4 a2 = a * a;
    const mat4 a3 = a2 * a;
    const mat4 a4 = a3 * a;
    const double t1 = std::real(a.trace());
    const double t2 = std::real(a2.trace());
    const double t3 = std::real(a3.trace());
    const double t4 = std::real(a4.trace());
    const double e1 = t1;
    const double e2 = (t1 * t1 - t2) / 2.0;
    const double e3 = (t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0;
    const double e4 =
        (std::pow(t1, 4) - 6.0 * t1 * t1 * t2 + 3.0 * t2 * t2 + 8.0 * t1 * t3 - 6.0 * t4) /
        24.0;
    return {e1, e2, e3, e4};
}

inline std::array<double, 4> charpoly_eigenvalues(const mat4& a) {
    const auto e = charpoly_esym(a);
    const auto roots = ptmom::solve_quartic(1.0, -e[0], e[1], -e[2], e[3]);
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = roots[i].real();
    std::sort(out.begin(), out.end());
    return out;
}

/// Entropy of entanglement of a pure state from its Schmidt coefficients:
/// the reduced 2x2 state of qubit A is diagonalized analytically.
inline double schmidt_entanglement_entropy(const ptmom::density_matrix& rho) {
    const mat4& m = rho.matrix();
    // rho_A(i,k) = sum_j rho(2i+j, 2k+j)
    const double a00 = std::real(m(0, 0) + m(1, 1));
    const double a11 = std::real(m(2, 2) + m(3, 3));
    const cplx a01 = m(0, 2) + m(1, 3);
    const double tr = a00 + a11;
    const double det = a00 * a11 - std::norm(a01);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double mu = 0.5 * (tr + disc);
    return ptmom::binary_entropy(std::clamp(mu, 0.0, 1.0));
}

/// Hermitian 4x4 with independent Gaussian entries (GUE-like), unnormalized.
inline mat4 random_hermitian(ptmom::rng& r) {
    mat4 m;
    for (int i = 0; i < 4; ++i) {
        m(i, i) = r.normal();
        for (int j = i + 1; j < 4; ++j) {
            const cplx z = 0.5 * r.complex_normal();
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

/// Kolmogorov-Smirnov distance of samples against U[0,1].
inline double ks_distance_uniform01(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = samples[i];
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

inline double max_abs(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

} // namespace ptest
