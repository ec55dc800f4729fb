#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ptmom/measures.hpp"
#include "ptmom/qmat.hpp"
#include "ptmom/xstates.hpp"

namespace ptmom {

/// Deterministic random source. mt19937_64 plus a hand-rolled Box-Muller so
/// that identical seeds give bit-identical streams on every platform
/// (std::normal_distribution is implementation-defined). Independent
/// substreams are derived from (seed, index), so study results do not depend
/// on how the index range is partitioned across workers.
class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    static rng substream(std::uint64_t seed, std::uint64_t index) {
        return rng(mix(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log argument.
    double uniform_open() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double phi = 2.0 * M_PI * uniform();
        cached_ = r * std::sin(phi);
        have_cached_ = true;
        return r * std::cos(phi);
    }

    cplx complex_normal() { return cplx(normal(), normal()); }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

/// rho = G G^H / tr(G G^H) with G a 4 x k matrix of independent standard
/// complex Gaussians: the induced measure with k ancilla dimensions. k = 4
/// is the Hilbert-Schmidt measure, k = 1 gives Haar-random pure states.
inline density_matrix random_induced_density_matrix(rng& r, int k) {
    std::vector<std::array<cplx, 4>> g(static_cast<std::size_t>(k));
    for (auto& col : g)
        for (auto& z : col) z = r.complex_normal();

    mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            cplx s = 0.0;
            for (int c = 0; c < k; ++c) s += g[c][i] * std::conj(g[c][j]);
            m(i, j) = s;
            if (j != i) m(j, i) = std::conj(s);
        }
    const double tr = std::real(m.trace());
    m *= 1.0 / tr;
    return density_matrix::from_elements(m);
}

/// Hilbert-Schmidt random state (square Ginibre).
inline density_matrix random_density_matrix(rng& r) {
    return random_induced_density_matrix(r, 4);
}

/// Haar-random pure two-qubit state.
inline density_matrix random_pure_state(rng& r) {
    return random_induced_density_matrix(r, 1);
}

/// Haar-random SU(2) element via a normalized Gaussian quaternion.
inline mat2 random_su2(rng& r) {
    double q0 = r.normal(), q1 = r.normal(), q2 = r.normal(), q3 = r.normal();
    const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    q0 /= n; q1 /= n; q2 /= n; q3 /= n;
    mat2 u;
    u(0, 0) = cplx(q0, q1);
    u(0, 1) = cplx(q2, q3);
    u(1, 0) = cplx(-q2, q3);
    u(1, 1) = cplx(q0, -q1);
    return u;
}

/// (ua x ub) rho (ua x ub)^H.
inline density_matrix local_rotate(const density_matrix& rho, const mat2& ua,
                                   const mat2& ub) {
    const mat4 u = kron(ua, ub);
    return density_matrix::from_elements(u * rho.matrix() * u.adjoint());
}

// ---------------------------------------------------------------------------
// Noise studies
// ---------------------------------------------------------------------------

/// Moment noise: the maximal relative deviation per moment, and the study seed.
struct noise_spec {
    double relative_bound = 0.0;
    std::uint64_t seed = 0;
};

struct scatter_record {
    double n_theory = 0.0;
    double n_experiment = 0.0;
    double w_theory = 0.0;
    double w_experiment = 0.0;
};

/// pi_n -> pi_n + delta_n with delta_n uniform on
/// [-bound * pi_n, +bound * pi_n] for n = 2, 3, 4. pi1 stays 1: the
/// negativity quartic treats it structurally.
inline moment_set perturb_moments(const moment_set& m, const noise_spec& spec, rng& r) {
    auto jitter = [&](double pi) {
        return pi + spec.relative_bound * pi * (2.0 * r.uniform() - 1.0);
    };
    moment_set out;
    out.pi1 = m.pi1;
    out.pi2 = jitter(m.pi2);
    out.pi3 = jitter(m.pi3);
    out.pi4 = jitter(m.pi4);
    return out;
}

/// Ensembles available to the Monte-Carlo studies. hilbert_schmidt is the
/// flat Ginibre measure; full_range mixes induced measures of every rank
/// (k drawn uniformly from 1..4), which is what populates the whole
/// negativity axis the way the scatter studies need.
enum class study_ensemble { full_range, hilbert_schmidt };

inline density_matrix random_study_state(rng& r, study_ensemble ens) {
    if (ens == study_ensemble::hilbert_schmidt) return random_density_matrix(r);
    const int k = 1 + static_cast<int>(r.uniform() * 4.0);
    return random_induced_density_matrix(r, std::min(k, 4));
}

namespace detail {

/// The "experimental" negativity of a noise study when the noisy witness
/// signals entanglement: the raw quartic root closest to the true value,
/// deliberately left unclamped so the scatter can dip below zero. If noise
/// pushed the nearby root pair off the real axis, the real part of the
/// closest root stands in.
inline double closest_quartic_root(const negativity_result& res, double n_theory) {
    bool have = false;
    double best = 0.0;
    for (const auto& root : res.all_roots) {
        if (std::abs(root.imag()) >= 1e-6) continue;
        if (!have || std::abs(root.real() - n_theory) < std::abs(best - n_theory))
            best = root.real();
        have = true;
    }
    if (have) return best;
    double nearest = res.all_roots[0].real();
    double dist = std::abs(res.all_roots[0] - cplx(n_theory, 0.0));
    for (const auto& root : res.all_roots) {
        const double d = std::abs(root - cplx(n_theory, 0.0));
        if (d < dist) {
            dist = d;
            nearest = root.real();
        }
    }
    return nearest;
}

} // namespace detail

/// One pass of the scatter study: per state, exact and perturbed moments and
/// the four derived quantities. Substreams make the result independent of
/// any partitioning of the index range.
inline std::vector<scatter_record> noise_study(int n_states, const noise_spec& spec,
                                               study_ensemble ens = study_ensemble::full_range) {
    std::vector<scatter_record> records;
    records.reserve(static_cast<std::size_t>(n_states));
    for (int i = 0; i < n_states; ++i) {
        rng r = rng::substream(spec.seed, static_cast<std::uint64_t>(i));
        const density_matrix rho = random_study_state(r, ens);
        const moment_set exact = moments(rho);
        const moment_set noisy = perturb_moments(exact, spec, r);

        scatter_record rec;
        rec.n_theory = negativity_spectral(rho);
        rec.w_theory = uwe(exact).w;
        const witness_value noisy_wit = uwe(noisy);
        rec.w_experiment = noisy_wit.w;
        // Separable verdict estimates N = 0; otherwise read the raw root.
        rec.n_experiment =
            noisy_wit.det_pt >= 0.0
                ? 0.0
                : detail::closest_quartic_root(negativity_from_moments(noisy),
                                               rec.n_theory);
        records.push_back(rec);
    }
    return records;
}

inline std::vector<scatter_record>
negativity_noise_study(int n_states, const noise_spec& spec,
                       study_ensemble ens = study_ensemble::full_range) {
    return noise_study(n_states, spec, ens);
}

inline std::vector<scatter_record>
witness_noise_study(int n_states, const noise_spec& spec,
                    study_ensemble ens = study_ensemble::full_range) {
    return noise_study(n_states, spec, ens);
}

// ---------------------------------------------------------------------------
// Twirling and the two counterexamples
// ---------------------------------------------------------------------------

/// Analytic twirl: averaging U x U rotations maps any state onto the Werner
/// form q psi- + (1-q) I/4 with the singlet weight fixed by the singlet
/// fidelity, q = (4F - 1)/3. Idempotent and fidelity-preserving.
inline density_matrix twirl_to_werner(const density_matrix& rho) {
    const mat4& m = rho.matrix();
    const double fidelity =
        0.5 * std::real(m(1, 1) + m(2, 2) - m(1, 2) - m(2, 1));
    const double q = (4.0 * fidelity - 1.0) / 3.0;
    mat4 w = q * pure_psi(M_PI / 4.0, -1) + (1.0 - q) * 0.25 * mat4::identity();
    return density_matrix::from_elements(w);
}

struct locc_report {
    double p = 0.0;
    double w_before = 0.0;
    double w_after = 0.0;
    bool violated = false;
};

/// Witness before/after twirling the Bell-diagonal state
/// p psi-(pi/4) + (1-p) phi+(pi/4).
inline locc_report locc_violation_at(double p) {
    const mat4 m = p * pure_psi(M_PI / 4.0, -1) + (1.0 - p) * pure_phi(M_PI / 4.0, +1);
    const density_matrix rho = density_matrix::from_elements(m);
    locc_report rep;
    rep.p = p;
    rep.w_before = uwe(moments(rho)).w;
    rep.w_after = uwe(moments(twirl_to_werner(rho))).w;
    rep.violated = rep.w_before < rep.w_after;
    return rep;
}

/// The maximal LOCC violation of the witness: twirling at
/// p = (3 sqrt(17) - 7)/8 raises w, which a proper entanglement measure
/// never allows.
inline locc_report locc_counterexample() {
    return locc_violation_at((3.0 * std::sqrt(17.0) - 7.0) / 8.0);
}

struct convexity_report {
    double w_rho1 = 0.0;
    double w_rho2 = 0.0;
    double w_mix = 0.0;
    bool violated = false;
};

/// Mixing rho1 = [phi+(0) + psi+(pi/8)]/2 with rho2 = [phi+(0) + psi-(5 pi/8)]/2
/// doubles the witness: w(rho) = 2^-5 versus w(rho1) = w(rho2) = 2^-6,
/// violating convexity.
inline convexity_report convexity_counterexample() {
    const mat4 m1 = 0.5 * (pure_phi(0.0, +1) + pure_psi(M_PI / 8.0, +1));
    const mat4 m2 = 0.5 * (pure_phi(0.0, +1) + pure_psi(5.0 * M_PI / 8.0, -1));
    const density_matrix rho1 = density_matrix::from_elements(m1);
    const density_matrix rho2 = density_matrix::from_elements(m2);
    const density_matrix mix = density_matrix::from_elements(0.5 * (m1 + m2));

    convexity_report rep;
    rep.w_rho1 = uwe(moments(rho1)).w;
    rep.w_rho2 = uwe(moments(rho2)).w;
    rep.w_mix = uwe(moments(mix)).w;
    rep.violated = rep.w_mix > 0.5 * (rep.w_rho1 + rep.w_rho2);
    return rep;
}

} // namespace ptmom
