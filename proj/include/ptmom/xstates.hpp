#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ptmom/measures.hpp"
#include "ptmom/qmat.hpp"

namespace ptmom {

/// Parameters of an X state
///     [ a  0  0  b ]
///     [ 0  c  d  0 ]
///     [ 0  d* e  0 ]
///     [ b* 0  0  f ]
/// with a + c + e + f = 1, |d| <= sqrt(ce), |b| <= sqrt(af).
struct xstate_params {
    double a = 0.0;
    double c = 0.0;
    double e = 0.0;
    double f = 0.0;
    cplx b{};
    cplx d{};

    static xstate_params create(double a, cplx b, double c, cplx d, double e, double f) {
        xstate_params p{a, c, e, f, b, d};
        const double neg = std::min(std::min(a, c), std::min(e, f));
        if (neg < -1e-12) throw not_positive_semidefinite(neg);
        const double tr_err = std::abs(a + c + e + f - 1.0);
        if (tr_err > 1e-12) throw trace_not_one(tr_err);
        if (std::abs(d) > std::sqrt(c * e) + 1e-12)
            throw not_positive_semidefinite(c * e - std::norm(d));
        if (std::abs(b) > std::sqrt(a * f) + 1e-12)
            throw not_positive_semidefinite(a * f - std::norm(b));
        return p;
    }
};

inline density_matrix xstate(const xstate_params& p) {
    mat4 m;
    m(0, 0) = p.a;
    m(1, 1) = p.c;
    m(2, 2) = p.e;
    m(3, 3) = p.f;
    m(0, 3) = p.b;
    m(3, 0) = std::conj(p.b);
    m(1, 2) = p.d;
    m(2, 1) = std::conj(p.d);
    return density_matrix::from_elements(m);
}

/// Closed-form X-state concurrence, C = 2 max(0, |d| - sqrt(af), |b| - sqrt(ce)).
inline double xstate_concurrence(const xstate_params& p) {
    const double t1 = std::abs(p.d) - std::sqrt(p.a * p.f);
    const double t2 = std::abs(p.b) - std::sqrt(p.c * p.e);
    return 2.0 * std::max({0.0, t1, t2});
}

/// Factored witness for X states,
/// W = [(|d| - sqrt(af))(|d| + sqrt(af))] [(|b| - sqrt(ce))(|b| + sqrt(ce))],
/// the volume of a four-dimensional box.
inline double xstate_witness_factored(const xstate_params& p) {
    const double saf = std::sqrt(p.a * p.f);
    const double sce = std::sqrt(p.c * p.e);
    const double ad = std::abs(p.d);
    const double ab = std::abs(p.b);
    return ((ad - saf) * (ad + saf)) * ((ab - sce) * (ab + sce));
}

/// Pure X-type projectors phi_pm(theta) (outer block) and psi_pm(theta)
/// (inner block). The diagonal pair is computed from cos(2 theta) with the
/// second entry as an exact complement, so theta = pi/4 reproduces the Bell
/// projectors with exact 1/2 entries.
inline mat4 pure_phi(double theta, int sign) {
    const double diag_hi = 0.5 * (1.0 + std::cos(2.0 * theta));
    const double off = 0.5 * std::sin(2.0 * theta) * (sign >= 0 ? 1.0 : -1.0);
    mat4 m;
    m(0, 0) = diag_hi;
    m(3, 3) = 1.0 - diag_hi;
    m(0, 3) = off;
    m(3, 0) = off;
    return m;
}

inline mat4 pure_psi(double theta, int sign) {
    const double diag_hi = 0.5 * (1.0 + std::cos(2.0 * theta));
    const double off = 0.5 * std::sin(2.0 * theta) * (sign >= 0 ? 1.0 : -1.0);
    mat4 m;
    m(1, 1) = diag_hi;
    m(2, 2) = 1.0 - diag_hi;
    m(1, 2) = off;
    m(2, 1) = off;
    return m;
}

inline density_matrix bell_phi_plus() {
    mat4 m;
    m(0, 0) = m(3, 3) = m(0, 3) = m(3, 0) = 0.5;
    return density_matrix::from_elements(m);
}

inline density_matrix bell_phi_minus() {
    mat4 m;
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = -0.5;
    return density_matrix::from_elements(m);
}

inline density_matrix bell_psi_plus() {
    mat4 m;
    m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = 0.5;
    return density_matrix::from_elements(m);
}

inline density_matrix bell_psi_minus() {
    mat4 m;
    m(1, 1) = m(2, 2) = 0.5;
    m(1, 2) = m(2, 1) = -0.5;
    return density_matrix::from_elements(m);
}

inline density_matrix maximally_mixed() {
    return density_matrix::from_elements(mat4::identity() * 0.25);
}

// ---------------------------------------------------------------------------
// Canonical rank-specific real X states: incoherent mixtures
//   p1 phi+(t1) + p2 phi-(t2) + p3 psi+(t3) + p4 psi-(t4).
// ---------------------------------------------------------------------------

enum class xstate_rank { r1, r2a, r2b, r3, r4 };

inline int rank_of_label(xstate_rank r) {
    switch (r) {
    case xstate_rank::r1: return 1;
    case xstate_rank::r2a:
    case xstate_rank::r2b: return 2;
    case xstate_rank::r3: return 3;
    default: return 4;
    }
}

struct canonical_x_spec {
    xstate_rank rank_label = xstate_rank::r4;
    std::array<double, 4> weights{}; ///< for phi+, phi-, psi+, psi- in order
    std::array<double, 4> angles{};  ///< radians

    static canonical_x_spec create(xstate_rank label, std::array<double, 4> weights,
                                   std::array<double, 4> angles) {
        double sum = 0.0;
        int nonzero = 0;
        for (double w : weights) {
            if (w < -1e-12) throw not_positive_semidefinite(w);
            if (w > 0.0) ++nonzero;
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw trace_not_one(std::abs(sum - 1.0));
        if (nonzero != rank_of_label(label))
            throw case_mismatch("number of nonzero weights does not match rank label");
        return canonical_x_spec{label, weights, angles};
    }
};

struct canonical_build {
    density_matrix state;
    int rank = 0;
    bool rank_deficient = false; ///< warning: angles accidentally reduced the rank
};

inline canonical_build canonical_xstate(const canonical_x_spec& s) {
    mat4 m = s.weights[0] * pure_phi(s.angles[0], +1) +
             s.weights[1] * pure_phi(s.angles[1], -1) +
             s.weights[2] * pure_psi(s.angles[2], +1) +
             s.weights[3] * pure_psi(s.angles[3], -1);
    density_matrix rho = density_matrix::from_elements(m);
    const auto eig = hermitian_eigenvalues_of(rho.matrix());
    int rank = 0;
    for (double v : eig)
        if (v > 1e-10) ++rank;
    return canonical_build{rho, rank, rank != rank_of_label(s.rank_label)};
}

// ---------------------------------------------------------------------------
// The eight survey families (g_n = 1 - n f throughout).
// ---------------------------------------------------------------------------

namespace detail {

inline void require_range(bool ok, const std::string& inequality) {
    if (!ok) throw out_of_validity_range(inequality);
}

inline void require_match(bool ok, const std::string& detail_msg) {
    if (!ok) throw case_mismatch(detail_msg);
}

} // namespace detail

inline int case_family_param_count(int case_id) {
    switch (case_id) {
    case 1: case 2: case 3: case 8: return 1;
    default: return 2;
    }
}

/// Builds a member of family `case_id` from its free parameters:
///   1: {c}      pure,             a=b=f=0, e=1-c, |d|=sqrt(ce)
///   2: {f}      rank-2 Bell diag, a=b=f, c=d=e=(1-2f)/2
///   3: {d}      phase damped,     a=b=f=0, c=e=1/2
///   4: {c,e}    amplitude damped, a=b=0, f=1-c-e, |d|=sqrt(ce)
///   5: {f,c}    degenerate AD,    b=0, a=f, e=1-2f-c, |d|=sqrt(ce)>f
///   6: {f,d}    rank-3 Bell diag, a=b=f, c=e=(1-2f)/2, 1/4<f<1/2
///   7: {f,C}    isotropic-noise,  b=0, a=f, |d|=C/2+f, ce=(C^2+4fC+2f-f^2)/4
///   8: {f}      Werner,           b=0, a=f<1/6, c=e=(1-2f)/2, |d|=(1-4f)/2
inline xstate_params case_family(int case_id, const std::vector<double>& params) {
    if (case_id < 1 || case_id > 8)
        throw out_of_range("case id outside 1..8", case_id);
    if (static_cast<int>(params.size()) != case_family_param_count(case_id))
        throw out_of_range("wrong number of free parameters for case",
                           static_cast<double>(params.size()));

    switch (case_id) {
    case 1: {
        const double c = params[0];
        detail::require_range(c > 0.0 && c < 1.0, "0 < c < 1");
        const double e = 1.0 - c;
        return xstate_params::create(0.0, 0.0, c, std::sqrt(c * e), e, 0.0);
    }
    case 2: {
        const double f = params[0];
        detail::require_range(f > 0.0 && f < 0.5, "0 < f < 1/2");
        const double half_g2 = 0.5 * (1.0 - 2.0 * f);
        return xstate_params::create(f, f, half_g2, half_g2, half_g2, f);
    }
    case 3: {
        const double d = params[0];
        detail::require_range(d >= 0.0 && d < 0.5, "0 <= |d| < 1/2");
        return xstate_params::create(0.0, 0.0, 0.5, d, 0.5, 0.0);
    }
    case 4: {
        const double c = params[0];
        const double e = params[1];
        detail::require_range(c > 0.0 && e > 0.0, "c > 0 and e > 0");
        detail::require_range(c + e < 1.0, "c + e < 1 (f > 0)");
        const double f = 1.0 - c - e;
        return xstate_params::create(0.0, 0.0, c, std::sqrt(c * e), e, f);
    }
    case 5: {
        const double f = params[0];
        const double c = params[1];
        detail::require_range(f > 0.0 && f < 0.5, "0 < f < 1/2");
        const double e = 1.0 - 2.0 * f - c;
        detail::require_range(c > 0.0 && e > 0.0, "c > 0 and e = 1 - 2f - c > 0");
        const double d = std::sqrt(c * e);
        detail::require_range(d > f, "sqrt(ce) > f");
        return xstate_params::create(f, 0.0, c, d, e, f);
    }
    case 6: {
        const double f = params[0];
        const double d = params[1];
        detail::require_range(f > 0.25 && f < 0.5, "1/4 < f < 1/2");
        const double half_g2 = 0.5 * (1.0 - 2.0 * f);
        detail::require_range(d >= 0.0 && d < half_g2, "0 <= |d| < (1-2f)/2");
        return xstate_params::create(f, f, half_g2, d, half_g2, f);
    }
    case 7: {
        const double f = params[0];
        const double cc = params[1];
        detail::require_range(f > 0.0 && f < 0.2, "0 < f < 1/5");
        detail::require_range(cc > 0.0 && cc < 1.0 - 5.0 * f, "0 < C < 1 - 5f");
        const double sum_ce = 1.0 - 2.0 * f;
        const double prod_ce = (cc * cc + 4.0 * f * cc + 2.0 * f - f * f) / 4.0;
        const double disc = sum_ce * sum_ce - 4.0 * prod_ce;
        detail::require_range(disc >= 0.0, "C <= 1 - 5f (real c, e)");
        const double c = 0.5 * (sum_ce + std::sqrt(disc));
        const double e = sum_ce - c;
        return xstate_params::create(f, 0.0, c, 0.5 * cc + f, e, f);
    }
    default: {
        const double f = params[0];
        detail::require_range(f > 0.0 && f < 1.0 / 6.0, "0 < f < 1/6");
        const double half_g2 = 0.5 * (1.0 - 2.0 * f);
        const double half_g4 = 0.5 * (1.0 - 4.0 * f);
        return xstate_params::create(f, 0.0, half_g2, half_g4, half_g2, f);
    }
    }
}

/// Closed-form survey predictions for one case. N is closed-form where the
/// survey states one (cases 1-4, 8) and the spectral value otherwise,
/// flagged by n_from_spectral.
struct case_prediction {
    int case_id = 0;
    double pi2 = 0.0;
    double pi3 = 0.0;
    double pi4 = 0.0;
    double w_det = 0.0; ///< W = det(rho^Gamma)
    double c = 0.0;
    double n = 0.0;
    bool n_from_spectral = false;
};

namespace detail {

inline void check_case_pattern(int case_id, const xstate_params& p) {
    constexpr double tol = 1e-9;
    const double ab = std::abs(p.b);
    const double ad = std::abs(p.d);
    switch (case_id) {
    case 1:
        require_match(p.a < tol && ab < tol && p.f < tol, "case 1 needs a = b = f = 0");
        require_match(std::abs(ad - std::sqrt(p.c * p.e)) < tol,
                      "case 1 needs |d| = sqrt(ce)");
        break;
    case 2:
        require_match(std::abs(p.a - p.f) < tol && std::abs(ab - p.a) < tol,
                      "case 2 needs a = b = f");
        require_match(std::abs(p.c - p.e) < tol && std::abs(ad - p.c) < tol &&
                          std::abs(p.c - 0.5 * (1.0 - 2.0 * p.f)) < tol,
                      "case 2 needs c = d = e = (1-2f)/2");
        break;
    case 3:
        require_match(p.a < tol && ab < tol && p.f < tol, "case 3 needs a = b = f = 0");
        require_match(std::abs(p.c - 0.5) < tol && std::abs(p.e - 0.5) < tol,
                      "case 3 needs c = e = 1/2");
        break;
    case 4:
        require_match(p.a < tol && ab < tol, "case 4 needs a = b = 0");
        require_match(std::abs(ad - std::sqrt(p.c * p.e)) < tol,
                      "case 4 needs |d| = sqrt(ce)");
        break;
    case 5:
        require_match(ab < tol && std::abs(p.a - p.f) < tol, "case 5 needs b = 0, a = f");
        require_match(std::abs(ad - std::sqrt(p.c * p.e)) < tol,
                      "case 5 needs |d| = sqrt(ce)");
        require_match(ad > p.f - tol, "case 5 needs |d| > f");
        break;
    case 6:
        require_match(std::abs(p.a - p.f) < tol && std::abs(ab - p.a) < tol,
                      "case 6 needs a = b = f");
        require_match(std::abs(p.c - p.e) < tol &&
                          std::abs(p.c - 0.5 * (1.0 - 2.0 * p.f)) < tol,
                      "case 6 needs c = e = (1-2f)/2");
        require_match(p.f > 0.25 - tol, "case 6 needs f > 1/4");
        break;
    case 7:
        require_match(ab < tol && std::abs(p.a - p.f) < tol, "case 7 needs b = 0, a = f");
        require_match(std::abs((p.c - 0.5 * p.f) * (p.e - 0.5 * p.f) - ad * ad) < tol,
                      "case 7 needs |d| = sqrt((c - f/2)(e - f/2))");
        require_match(ad > p.f - tol, "case 7 needs |d| > f");
        break;
    default:
        require_match(ab < tol && std::abs(p.a - p.f) < tol, "case 8 needs b = 0, a = f");
        require_match(std::abs(p.c - p.e) < tol &&
                          std::abs(p.c - 0.5 * (1.0 - 2.0 * p.f)) < tol,
                      "case 8 needs c = e = (1-2f)/2");
        require_match(std::abs(ad - 0.5 * (1.0 - 4.0 * p.f)) < tol,
                      "case 8 needs |d| = (1-4f)/2");
        break;
    }
}

} // namespace detail

inline case_prediction case_predictions(int case_id, const xstate_params& p) {
    if (case_id < 1 || case_id > 8)
        throw out_of_range("case id outside 1..8", case_id);
    detail::check_case_pattern(case_id, p);

    case_prediction out;
    out.case_id = case_id;
    const double f = p.f;
    const double d = std::abs(p.d);

    switch (case_id) {
    case 1: {
        const double n = 2.0 * d;
        out.c = out.n = n;
        out.pi2 = 1.0;
        out.pi3 = 1.0 - 0.75 * n * n;
        out.pi4 = (1.0 - 0.5 * n * n) * (1.0 - 0.5 * n * n);
        out.w_det = -std::pow(n, 4) / 16.0;
        break;
    }
    case 2:
    case 3: {
        const double n = (case_id == 2) ? std::abs(1.0 - 4.0 * f) : 2.0 * d;
        out.c = out.n = n;
        out.pi2 = 0.5 * (n * n + 1.0);
        out.pi3 = 0.25;
        out.pi4 = (std::pow(n, 4) + 1.0) / 8.0;
        out.w_det = -n * n / 16.0;
        break;
    }
    case 4: {
        const double cc = 2.0 * d;
        const double g1 = 1.0 - f;
        const double g2 = 1.0 - 2.0 * f;
        out.c = cc;
        out.n = -f + std::sqrt(f * f + cc * cc); // inverse of C = sqrt(N^2 + 2 f N)
        out.pi2 = g2 + 2.0 * f * f;
        out.pi3 = 1.0 - 3.0 * (1.0 + 0.5 * cc * cc) * g1 + 3.0 * g1 * g1 + 0.75 * cc * cc;
        out.pi4 = std::pow(cc, 4) / 4.0 - g2 * cc * cc + std::pow(g1, 4) + std::pow(f, 4);
        out.w_det = -std::pow(cc, 4) / 16.0;
        break;
    }
    case 5: {
        const double cc = 2.0 * d - 2.0 * f;
        const double g2 = 1.0 - 2.0 * f;
        const double g4 = 1.0 - 4.0 * f;
        out.c = cc;
        out.n_from_spectral = true;
        out.pi2 = g4 + 6.0 * f * f;
        out.pi3 = std::pow(g2, 3) + 2.0 * std::pow(f, 3) -
                  0.75 * g4 * (cc + 2.0 * f) * (cc + 2.0 * f);
        const double q = g2 * g2 - 0.5 * (cc + 2.0 * f) * (cc + 2.0 * f);
        out.pi4 = q * q + 3.0 * std::pow(cc * f + 2.0 * f * f, 2) + 2.0 * std::pow(f, 4);
        out.w_det = -cc * (cc + 4.0 * f) * (cc + 2.0 * f) * (cc + 2.0 * f) / 16.0;
        break;
    }
    case 6: {
        const double cc = std::abs(1.0 - 4.0 * f);
        out.c = cc;
        out.n_from_spectral = true;
        out.pi2 = cc * (3.0 * cc + 2.0) / 8.0 + 2.0 * d * d + 3.0 / 8.0;
        out.pi3 = (3.0 * cc * (1.0 - cc * cc + cc + 16.0 * d * d) + 48.0 * d * d + 5.0) / 32.0;
        out.pi4 = (9.0 * std::pow(cc, 4) + 4.0 * std::pow(cc, 3) +
                   6.0 * (16.0 * d * d + 1.0) * cc * cc +
                   4.0 * (48.0 * d * d + 1.0) * cc + 256.0 * std::pow(d, 4) +
                   96.0 * d * d + 9.0) / 128.0;
        out.w_det = -cc * (cc * cc + 2.0 * cc + 1.0 - 16.0 * d * d) / 64.0;
        break;
    }
    case 7: {
        const double cc = 2.0 * d - 2.0 * f;
        const double g4 = 1.0 - 4.0 * f;
        const double g10 = 1.0 - 10.0 * f;
        out.c = cc;
        out.n_from_spectral = true;
        out.pi2 = std::pow(1.0 - 3.0 * f, 2) + (1.0 - 3.0 * f) * f + 2.5 * f * f;
        out.pi3 = -0.75 * cc * cc * g4 - 1.5 * std::pow(f, 3) - 3.0 * f * g4 * cc +
                  63.0 / 4.0 * f * f - 7.5 * f + 1.0;
        out.pi4 = 0.25 * std::pow(cc, 4) + 2.0 * f * std::pow(cc, 3) +
                  0.75 * (5.0 * f * f + 6.0 * f - 4.0 / 3.0) * cc * cc -
                  f * (f * f - 18.0 * f + 4.0) * cc + 289.0 / 8.0 * std::pow(f, 4) -
                  44.5 * std::pow(f, 3) + 33.5 * f * f + g10;
        out.w_det = -std::pow(cc, 4) / 16.0 - 0.5 * f * std::pow(cc, 3) -
                    f * (15.0 * f + 2.0) * cc * cc / 16.0 -
                    0.25 * f * f * (2.0 - f) * cc;
        break;
    }
    default: {
        const double n = std::abs(1.0 - 6.0 * f);
        out.c = out.n = n;
        out.pi2 = n + (1.0 - n) * (1.0 - n) / 3.0;
        out.pi3 = (-4.0 * std::pow(n, 3) + 3.0 * n * n + 6.0 * n + 4.0) / 36.0;
        out.pi4 = (7.0 * std::pow(n, 4) + 2.0 * std::pow(n, 3) + 6.0 * n * n + 8.0 * n +
                   4.0) / 108.0;
        out.w_det = std::pow((1.0 - n) / 3.0 - 1.0, 3) * n / 16.0;
        break;
    }
    }

    if (out.n_from_spectral) out.n = negativity_spectral(xstate(p));
    return out;
}

/// Survey-to-canonical parameter map: weights and angles of the mixture
/// reproducing (up to local unitaries) the case family member p.
inline canonical_x_spec canonical_spec_for_case(int case_id, const xstate_params& p) {
    const double f = p.f;
    const double d = std::abs(p.d);
    const double quarter_pi = M_PI / 4.0;
    switch (case_id) {
    case 1:
        return canonical_x_spec::create(xstate_rank::r1, {0.0, 0.0, 1.0, 0.0},
                                        {0.0, 0.0, std::acos(std::sqrt(p.c)), 0.0});
    case 2:
        return canonical_x_spec::create(
            xstate_rank::r2a, {2.0 * f, 0.0, 1.0 - 2.0 * f, 0.0},
            {quarter_pi, 0.0, quarter_pi, 0.0});
    case 3:
        return canonical_x_spec::create(xstate_rank::r2b, {0.0, 0.0, 0.5 + d, 0.5 - d},
                                        {0.0, 0.0, quarter_pi, quarter_pi});
    case 4: {
        const double g1 = 1.0 - f;
        return canonical_x_spec::create(
            xstate_rank::r2b, {f, 0.0, g1, 0.0},
            {M_PI / 2.0, 0.0, std::acos(std::sqrt(p.c / g1)), 0.0});
    }
    case 5: {
        const double g2 = 1.0 - 2.0 * f;
        return canonical_x_spec::create(
            xstate_rank::r3, {f, f, g2, 0.0},
            {quarter_pi, quarter_pi, std::acos(std::sqrt(p.c / g2)), 0.0});
    }
    case 6: {
        const double half_g2 = 0.5 * (1.0 - 2.0 * f);
        return canonical_x_spec::create(
            xstate_rank::r3, {2.0 * f, 0.0, half_g2 + d, half_g2 - d},
            {quarter_pi, 0.0, quarter_pi, quarter_pi});
    }
    case 7: {
        const double g3 = 1.0 - 3.0 * f;
        const double theta3 = std::acos(std::sqrt((2.0 * p.c - f) / (2.0 * g3)));
        return canonical_x_spec::create(
            xstate_rank::r4, {f, f, 1.0 - 2.5 * f, 0.5 * f},
            {quarter_pi, quarter_pi, theta3, M_PI / 2.0 - theta3});
    }
    default:
        return canonical_x_spec::create(xstate_rank::r4, {f, f, 1.0 - 3.0 * f, f},
                                        {quarter_pi, quarter_pi, quarter_pi, quarter_pi});
    }
}

/// Componentwise comparison of the closed-form survey row against direct
/// numerics, plus the canonical construction matched by its invariant vector
/// (pi2, pi3, pi4, N, C) since the correspondence only holds up to local
/// unitaries. Deviations are reported, never thrown.
struct case_report {
    int case_id = 0;
    xstate_params params;
    case_prediction prediction;
    moment_set numeric_moments;
    double numeric_w = 0.0;
    double factored_w = 0.0;
    double numeric_c = 0.0;
    double numeric_n = 0.0;
    double dev_pi2 = 0.0;
    double dev_pi3 = 0.0;
    double dev_pi4 = 0.0;
    double dev_w = 0.0;
    double dev_factored_w = 0.0;
    double dev_c = 0.0;
    double dev_n = 0.0;
    double dev_canonical = 0.0;
    int canonical_rank = 0;
    bool canonical_rank_deficient = false;
    double max_deviation = 0.0;
};

inline case_report verify_case(int case_id, const std::vector<double>& params) {
    case_report rep;
    rep.case_id = case_id;
    rep.params = case_family(case_id, params);

    const density_matrix rho = xstate(rep.params);
    rep.numeric_moments = moments(rho);
    rep.numeric_w = uwe(rep.numeric_moments).det_pt;
    rep.factored_w = xstate_witness_factored(rep.params);
    rep.numeric_c = concurrence(rho);
    rep.numeric_n = negativity_spectral(rho);
    rep.prediction = case_predictions(case_id, rep.params);

    rep.dev_pi2 = std::abs(rep.prediction.pi2 - rep.numeric_moments.pi2);
    rep.dev_pi3 = std::abs(rep.prediction.pi3 - rep.numeric_moments.pi3);
    rep.dev_pi4 = std::abs(rep.prediction.pi4 - rep.numeric_moments.pi4);
    rep.dev_w = std::abs(rep.prediction.w_det - rep.numeric_w);
    rep.dev_factored_w = std::abs(rep.factored_w - rep.numeric_w);
    rep.dev_c = std::abs(rep.prediction.c - rep.numeric_c);
    rep.dev_n = std::abs(rep.prediction.n - rep.numeric_n);

    const canonical_build canon = canonical_xstate(canonical_spec_for_case(case_id, rep.params));
    rep.canonical_rank = canon.rank;
    rep.canonical_rank_deficient = canon.rank_deficient;
    const moment_set cm = moments(canon.state);
    const double cn = negativity_spectral(canon.state);
    const double cc = concurrence(canon.state);
    rep.dev_canonical = std::max({std::abs(cm.pi2 - rep.numeric_moments.pi2),
                                  std::abs(cm.pi3 - rep.numeric_moments.pi3),
                                  std::abs(cm.pi4 - rep.numeric_moments.pi4),
                                  std::abs(cn - rep.numeric_n),
                                  std::abs(cc - rep.numeric_c)});

    rep.max_deviation = std::max({rep.dev_pi2, rep.dev_pi3, rep.dev_pi4, rep.dev_w,
                                  rep.dev_factored_w, rep.dev_c, rep.dev_n,
                                  rep.dev_canonical});
    return rep;
}

/// Deterministic sweep of n valid parameter settings for one case, via a
/// low-discrepancy sequence mapped into the case's validity box.
inline std::vector<std::vector<double>> sweep_case_parameters(int case_id, int n) {
    if (case_id < 1 || case_id > 8)
        throw out_of_range("case id outside 1..8", case_id);
    auto frac = [](double x) { return x - std::floor(x); };
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double u = frac((k + 0.5) * 0.7548776662466927);
        const double v = frac((k + 0.5) * 0.5698402909980532);
        switch (case_id) {
        case 1: out.push_back({0.02 + 0.96 * u}); break;
        case 2: out.push_back({0.01 + 0.48 * u}); break;
        case 3: out.push_back({0.49 * u}); break;
        case 4: {
            const double c = 0.02 + 0.58 * u;
            const double e = 0.02 + (0.96 - c - 0.02) * v;
            out.push_back({c, e});
            break;
        }
        case 5: {
            const double f = 0.01 + 0.23 * u;
            const double g2 = 1.0 - 2.0 * f;
            // c (1-2f-c) > f^2 inside the open interval around g2/2
            const double half_width = 0.5 * std::sqrt(g2 * g2 - 4.0 * f * f);
            const double c = 0.5 * g2 + (2.0 * v - 1.0) * 0.95 * half_width;
            out.push_back({f, c});
            break;
        }
        case 6: {
            const double f = 0.26 + 0.23 * u;
            const double d = v * 0.95 * 0.5 * (1.0 - 2.0 * f);
            out.push_back({f, d});
            break;
        }
        case 7: {
            const double f = 0.01 + 0.18 * u;
            const double cmax = 1.0 - 5.0 * f;
            out.push_back({f, cmax * (0.02 + 0.96 * v)});
            break;
        }
        default: out.push_back({0.004 + 0.158 * u}); break;
        }
    }
    return out;
}

} // namespace ptmom
