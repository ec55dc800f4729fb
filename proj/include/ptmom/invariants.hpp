#pragma once

#include <array>

#include "ptmom/qmat.hpp"

namespace ptmom {

/// The nine Makhlin invariants needed to express the moments of the
/// partially transposed state: I1 = det beta, I2 = tr(beta^T beta),
/// I3 = tr[(beta^T beta)^2], I4 = s.s, I5 = |s beta|^2, I7 = p.p,
/// I8 = |beta p|^2, I12 = s beta p, I14 = e_ijk e_lmn s_i p_l b_jm b_kn.
struct invariant_set {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double i4 = 0.0;
    double i5 = 0.0;
    double i7 = 0.0;
    double i8 = 0.0;
    double i12 = 0.0;
    double i14 = 0.0;
};

/// The combinations actually entering the moment formulas: the four x_k and
/// the six independent measurable invariants y_1..y_6.
struct derived_invariant_set {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
    double y3 = 0.0;
    double y4 = 0.0;
    double y5 = 0.0;
    double y6 = 0.0;
};

inline invariant_set makhlin_invariants(const bloch_form& b) {
    invariant_set inv;
    inv.i1 = det3(b.beta);

    const mat3 bt_b = mat3_mul(mat3_transpose(b.beta), b.beta);
    inv.i2 = mat3_trace(bt_b);
    inv.i3 = mat3_trace(mat3_mul(bt_b, bt_b));

    inv.i4 = b.s[0] * b.s[0] + b.s[1] * b.s[1] + b.s[2] * b.s[2];
    inv.i7 = b.p[0] * b.p[0] + b.p[1] * b.p[1] + b.p[2] * b.p[2];

    // s enters as a row vector, p as a column vector; this is the only
    // orientation closing the moment identity chain.
    vec3 s_beta{};
    vec3 beta_p{};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            s_beta[j] += b.s[i] * b.beta[i][j];
            beta_p[j] += b.beta[j][i] * b.p[i];
        }
    inv.i5 = s_beta[0] * s_beta[0] + s_beta[1] * s_beta[1] + s_beta[2] * s_beta[2];
    inv.i8 = beta_p[0] * beta_p[0] + beta_p[1] * beta_p[1] + beta_p[2] * beta_p[2];

    inv.i12 = s_beta[0] * b.p[0] + s_beta[1] * b.p[1] + s_beta[2] * b.p[2];

    // Double Levi-Civita contraction, expanded over the 6 x 6 nonzero
    // index triples.
    struct triple {
        int a, b, c;
        double sign;
    };
    constexpr std::array<triple, 6> eps{{{0, 1, 2, 1.0},
                                         {1, 2, 0, 1.0},
                                         {2, 0, 1, 1.0},
                                         {0, 2, 1, -1.0},
                                         {2, 1, 0, -1.0},
                                         {1, 0, 2, -1.0}}};
    double i14 = 0.0;
    for (const auto& t1 : eps)
        for (const auto& t2 : eps)
            i14 += t1.sign * t2.sign * b.s[t1.a] * b.p[t2.a] * b.beta[t1.b][t2.b] *
                   b.beta[t1.c][t2.c];
    inv.i14 = i14;
    return inv;
}

inline derived_invariant_set derived_invariants(const invariant_set& inv) {
    derived_invariant_set d;
    d.y1 = inv.i2;
    d.y2 = inv.i4;
    d.y3 = inv.i7;
    d.y4 = inv.i1 + inv.i12;
    d.y5 = inv.i5 + inv.i8 + inv.i14;
    d.y6 = inv.i3;
    d.x1 = d.y1 + d.y2 + d.y3;
    d.x2 = d.y4;
    d.x3 = d.y1 * d.y1 - d.y6;
    d.x4 = d.y5 + d.y2 * d.y3;
    return d;
}

/// Moments reconstructed from invariants: 4 pi2 = 1 + x1,
/// 16 pi3 = 1 + 3 x1 + 6 x2, 64 pi4 = 1 + 6 x1 + 24 x2 + x1^2 + 2 x3 + 4 x4.
/// Independent of the trace-power path in qmat.
inline moment_set moments_from_invariants(const derived_invariant_set& d) {
    moment_set m;
    m.pi1 = 1.0;
    m.pi2 = (1.0 + d.x1) / 4.0;
    m.pi3 = (1.0 + 3.0 * d.x1 + 6.0 * d.x2) / 16.0;
    m.pi4 = (1.0 + 6.0 * d.x1 + 24.0 * d.x2 + d.x1 * d.x1 + 2.0 * d.x3 + 4.0 * d.x4) / 64.0;
    return m;
}

} // namespace ptmom
