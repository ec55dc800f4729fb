#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace ptmom {

using cplx = std::complex<double>;
using vec3 = std::array<double, 3>;
using mat3 = std::array<std::array<double, 3>, 3>;

/// 2x2 complex matrix, row-major. Used for Pauli matrices and local unitaries.
struct mat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const {
        return e[2 * r + c];
    }

    mat2 adjoint() const {
        mat2 a;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) a(r, c) = std::conj((*this)(c, r));
        return a;
    }

    friend mat2 operator*(const mat2& x, const mat2& y) {
        mat2 z;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                z(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
        return z;
    }
};

/// Dense 4x4 complex matrix with value semantics, row-major storage.
/// Basis order throughout the library is |00>,|01>,|10>,|11> with the first
/// symbol referring to qubit A.
class mat4 {
public:
    mat4() : e_{} {}

    static mat4 zero() { return mat4{}; }

    static mat4 identity() {
        mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(int r, int c) { return e_[4 * r + c]; }
    const cplx& operator()(int r, int c) const {
        return e_[4 * r + c];
    }

    mat4& operator+=(const mat4& o) {
        for (std::size_t i = 0; i < 16; ++i) e_[i] += o.e_[i];
        return *this;
    }
    mat4& operator-=(const mat4& o) {
        for (std::size_t i = 0; i < 16; ++i) e_[i] -= o.e_[i];
        return *this;
    }
    mat4& operator*=(cplx s) {
        for (auto& v : e_) v *= s;
        return *this;
    }

    friend mat4 operator+(mat4 a, const mat4& b) { return a += b; }
    friend mat4 operator-(mat4 a, const mat4& b) { return a -= b; }
    friend mat4 operator*(mat4 a, cplx s) { return a *= s; }
    friend mat4 operator*(cplx s, mat4 a) { return a *= s; }
    friend mat4 operator*(mat4 a, double s) { return a *= cplx(s, 0.0); }
    friend mat4 operator*(double s, mat4 a) { return a *= cplx(s, 0.0); }

    friend mat4 operator*(const mat4& a, const mat4& b) {
        mat4 c;
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) {
                const cplx ark = a(r, k);
                if (ark == cplx{}) continue;
                for (int col = 0; col < 4; ++col) c(r, col) += ark * b(k, col);
            }
        return c;
    }

    cplx trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

    mat4 adjoint() const {
        mat4 a;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) a(r, c) = std::conj((*this)(c, r));
        return a;
    }

    mat4 transpose() const {
        mat4 t;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) t(r, c) = (*this)(c, r);
        return t;
    }

    mat4 conjugate() const {
        mat4 t;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) t(r, c) = std::conj((*this)(r, c));
        return t;
    }

    /// Largest |A(i,j) - conj(A(j,i))| over all entries.
    double hermiticity_defect() const {
        double worst = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = r; c < 4; ++c)
                worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return worst;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Largest entrywise |a - b| between two matrices.
    friend double max_abs_diff(const mat4& a, const mat4& b) {
        double m = 0.0;
        for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e_[i] - b.e_[i]));
        return m;
    }

    friend bool operator==(const mat4& a, const mat4& b) { return a.e_ == b.e_; }

private:
    std::array<cplx, 16> e_;
};

/// Kronecker product of two 2x2 matrices; (a ⊗ b)(2i+j, 2k+l) = a(i,k) b(j,l).
inline mat4 kron(const mat2& a, const mat2& b) {
    mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    m(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
    return m;
}

/// Pauli matrix sigma_k for k = 0 (identity), 1, 2, 3.
inline mat2 pauli(int k) {
    mat2 s;
    switch (k) {
    case 0: s(0, 0) = 1.0; s(1, 1) = 1.0; break;
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = cplx(0.0, -1.0); s(1, 0) = cplx(0.0, 1.0); break;
    default: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    }
    return s;
}

/// sigma_2 ⊗ sigma_2, the two-qubit spin-flip operator (real, symmetric).
inline mat4 spin_flip_operator() {
    return kron(pauli(2), pauli(2));
}

inline double det3(const mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline mat3 mat3_mul(const mat3& a, const mat3& b) {
    mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline mat3 mat3_transpose(const mat3& a) {
    mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
    return t;
}

inline double mat3_trace(const mat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

} // namespace ptmom
