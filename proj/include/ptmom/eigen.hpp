#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "ptmom/matrix.hpp"

namespace ptmom {

struct eigen_decomposition {
    std::array<double, 4> values{}; ///< ascending
    mat4 vectors;                   ///< column k is the eigenvector of values[k]
};

namespace detail {

/// Cyclic complex Jacobi iteration. Works on a symmetrized copy so that tiny
/// Hermiticity defects in the input cannot stall convergence.
inline eigen_decomposition jacobi_hermitian(const mat4& input) {
    mat4 a;
    for (int r = 0; r < 4; ++r) {
        a(r, r) = cplx(std::real(input(r, r)), 0.0);
        for (int c = r + 1; c < 4; ++c) {
            const cplx v = 0.5 * (input(r, c) + std::conj(input(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }

    mat4 v = mat4::identity();
    const double scale = std::max(a.max_abs(), 1e-300);

    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-16 * scale) break;

        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale) continue;

                const cplx phase = apq / mag;
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Plane rotation J: J(p,p)=J(q,q)=c, J(p,q)=s*phase,
                // J(q,p)=-s*conj(phase); update A <- J^H A J, V <- V J.
                a(p, p) = c * c * app - 2.0 * c * s * mag + s * s * aqq;
                a(q, q) = s * s * app + 2.0 * c * s * mag + c * c * aqq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                for (int k = 0; k < 4; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::array<double, 4> diag{};
    for (int i = 0; i < 4; ++i) diag[i] = std::real(a(i, i));
    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[x] < diag[y]; });

    eigen_decomposition out;
    for (int i = 0; i < 4; ++i) {
        out.values[i] = diag[order[i]];
        for (int r = 0; r < 4; ++r) out.vectors(r, i) = v(r, order[i]);
    }
    return out;
}

} // namespace detail

/// Eigenvalues of a 4x4 Hermitian matrix, ascending, accurate to ~1e-14.
inline std::array<double, 4> hermitian_eigenvalues_of(const mat4& a) {
    return detail::jacobi_hermitian(a).values;
}

inline eigen_decomposition hermitian_eigensystem_of(const mat4& a) {
    return detail::jacobi_hermitian(a);
}

/// Singular values of an arbitrary 4x4 complex matrix, descending, by
/// one-sided Jacobi orthogonalization of the columns. Small singular values
/// come out with absolute accuracy ~eps * ||A||, which matters for the
/// concurrence of nearly pure states.
inline std::array<double, 4> singular_values_of(const mat4& input) {
    std::array<std::array<cplx, 4>, 4> col; // col[j][r]
    for (int j = 0; j < 4; ++j)
        for (int r = 0; r < 4; ++r) col[j][r] = input(r, j);

    auto norm2 = [&](int j) {
        double s = 0.0;
        for (const auto& z : col[j]) s += std::norm(z);
        return s;
    };
    auto inner = [&](int i, int j) {
        cplx s = 0.0;
        for (int r = 0; r < 4; ++r) s += std::conj(col[i][r]) * col[j][r];
        return s;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                const double aii = norm2(i);
                const double ajj = norm2(j);
                const cplx g = inner(i, j);
                const double mag = std::abs(g);
                if (mag <= 1e-300 || mag <= 1e-16 * std::sqrt(aii * ajj)) continue;
                rotated = true;

                const cplx phase = g / mag;
                const double tau = (ajj - aii) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < 4; ++r) {
                    const cplx vi = col[i][r];
                    const cplx vj = col[j][r] * std::conj(phase);
                    col[i][r] = c * vi - s * vj;
                    col[j][r] = s * vi + c * vj;
                }
            }
        }
        if (!rotated) break;
    }

    std::array<double, 4> sig{};
    for (int j = 0; j < 4; ++j) sig[j] = std::sqrt(norm2(j));
    std::sort(sig.begin(), sig.end(), std::greater<double>());
    return sig;
}

} // namespace ptmom
