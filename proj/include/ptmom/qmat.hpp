#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "ptmom/eigen.hpp"
#include "ptmom/errors.hpp"
#include "ptmom/matrix.hpp"

namespace ptmom {

/// Validation limits used when admitting density matrices. Noise-free
/// fixtures must pass exactly; Monte-Carlo states must not be rejected by
/// rounding, hence the slightly loose PSD floor.
struct tolerances {
    double hermiticity = 1e-12;
    double trace = 1e-12;
    double psd_floor = -1e-10;
};

inline constexpr tolerances default_tolerances{};

/// A validated two-qubit state: 4x4 complex, Hermitian, unit trace, PSD.
/// Basis order |00>,|01>,|10>,|11>, row-major.
class density_matrix {
public:
    /// Validates and wraps a raw matrix. Throws not_hermitian, trace_not_one
    /// or not_positive_semidefinite, each reporting the offending magnitude.
    static density_matrix from_elements(const mat4& m,
                                        const tolerances& tol = default_tolerances) {
        const double herm = m.hermiticity_defect();
        if (herm > tol.hermiticity) throw not_hermitian(herm);
        const double tr_err = std::abs(m.trace() - cplx(1.0, 0.0));
        if (tr_err > tol.trace) throw trace_not_one(tr_err);
        const auto eig = hermitian_eigenvalues_of(m);
        if (eig[0] < tol.psd_floor) throw not_positive_semidefinite(eig[0]);
        return density_matrix(m);
    }

    const mat4& matrix() const noexcept { return m_; }

private:
    explicit density_matrix(mat4 m) : m_(std::move(m)) {}
    mat4 m_;
};

/// A 4x4 Hermitian matrix with arbitrary real trace; houses partial
/// transposes, which keep unit trace but lose positivity for entangled
/// states.
class hermitian4 {
public:
    static hermitian4 from_matrix(const mat4& m,
                                  const tolerances& tol = default_tolerances) {
        const double herm = m.hermiticity_defect();
        if (herm > tol.hermiticity) throw not_hermitian(herm);
        return hermitian4(m);
    }

    const mat4& matrix() const noexcept { return m_; }

private:
    explicit hermitian4(mat4 m) : m_(std::move(m)) {}
    mat4 m_;
};

/// The first four moments pi_n = tr[(rho^Gamma)^n] of a partial transpose.
struct moment_set {
    double pi1 = 0.0;
    double pi2 = 0.0;
    double pi3 = 0.0;
    double pi4 = 0.0;
};

/// Pauli expansion data of a two-qubit state: Bloch vectors s (qubit A),
/// p (qubit B) and the 3x3 correlation matrix beta.
struct bloch_form {
    vec3 s{};
    vec3 p{};
    mat3 beta{};
};

/// Transpose of the second qubit: entry (2i+j, 2k+l) -> (2i+l, 2k+j).
/// An involution on raw matrices.
inline mat4 partial_transpose(const mat4& in) {
    mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + l, 2 * k + j) = in(2 * i + j, 2 * k + l);
    return out;
}

/// Partial transpose of a state; Hermitian with unit trace, but indefinite
/// whenever the state is entangled.
inline hermitian4 partial_transpose(const density_matrix& rho) {
    return hermitian4::from_matrix(partial_transpose(rho.matrix()));
}

/// Eigenvalues of a Hermitian 4x4 matrix, ascending, accurate to ~1e-14.
inline std::array<double, 4> hermitian_eigenvalues(const hermitian4& m) {
    return hermitian_eigenvalues_of(m.matrix());
}

/// Moments via explicit matrix powers of rho^Gamma (never via eigenvalues,
/// so this path can cross-check the spectral one).
inline moment_set moments(const density_matrix& rho) {
    const mat4 g = partial_transpose(rho).matrix();
    const mat4 g2 = g * g;
    const mat4 g3 = g2 * g;
    const mat4 g4 = g3 * g;
    moment_set m;
    m.pi1 = std::real(g.trace());
    m.pi2 = std::real(g2.trace());
    m.pi3 = std::real(g3.trace());
    m.pi4 = std::real(g4.trace());
    return m;
}

/// Pauli expectation values s_i = tr[(sigma_i x sigma_0) rho], analogous p_j
/// and beta_ij = tr[(sigma_i x sigma_j) rho].
inline bloch_form bloch_decompose(const density_matrix& rho) {
    const mat4& m = rho.matrix();
    auto expectation = [&m](int i, int j) {
        const mat4 op = kron(pauli(i), pauli(j));
        return std::real((op * m).trace());
    };
    bloch_form b;
    for (int i = 1; i <= 3; ++i) {
        b.s[i - 1] = expectation(i, 0);
        b.p[i - 1] = expectation(0, i);
        for (int j = 1; j <= 3; ++j) b.beta[i - 1][j - 1] = expectation(i, j);
    }
    return b;
}

/// Inverse Pauli expansion; validation is applied, so Bloch data that do not
/// describe a state throw not_positive_semidefinite.
inline density_matrix bloch_compose(const bloch_form& b,
                                    const tolerances& tol = default_tolerances) {
    mat4 m = kron(pauli(0), pauli(0));
    for (int i = 1; i <= 3; ++i) {
        m += b.s[i - 1] * kron(pauli(i), pauli(0));
        m += b.p[i - 1] * kron(pauli(0), pauli(i));
        for (int j = 1; j <= 3; ++j) m += b.beta[i - 1][j - 1] * kron(pauli(i), pauli(j));
    }
    m *= 0.25;
    return density_matrix::from_elements(m, tol);
}

} // namespace ptmom
