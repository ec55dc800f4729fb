#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace ptmom;

TEST_CASE("spectral negativity: Bell, mixed, Werner fixtures") {
    CHECK(negativity_spectral(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(negativity_spectral(bell_psi_minus()) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(negativity_spectral(maximally_mixed()) == 0.0);

    // rho = psi_-/2 + I/8: PT spectrum has min eigenvalue -1/8, so N = 1/4.
    const mat4 w = 0.5 * pure_psi(M_PI / 4.0, -1) + 0.125 * mat4::identity();
    CHECK(negativity_spectral(density_matrix::from_elements(w)) ==
          doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("concurrence fixtures") {
    CHECK(concurrence(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
    mat4 prod;
    prod(0, 0) = 1.0;
    CHECK(concurrence(density_matrix::from_elements(prod)) < 1e-12);
    CHECK(concurrence(maximally_mixed()) == 0.0);
}

TEST_CASE("concurrence matches the X-state closed form to 1e-10") {
    rng r(11u);
    for (int i = 0; i < 500; ++i) {
        // Random valid X-state parameters.
        double a = r.uniform() + 0.02, c = r.uniform() + 0.02, e = r.uniform() + 0.02,
               f = r.uniform() + 0.02;
        const double sum = a + c + e + f;
        a /= sum; c /= sum; e /= sum; f /= sum;
        const double phase_b = 2.0 * M_PI * r.uniform();
        const double phase_d = 2.0 * M_PI * r.uniform();
        const cplx b = std::polar(r.uniform() * std::sqrt(a * f), phase_b);
        const cplx d = std::polar(r.uniform() * std::sqrt(c * e), phase_d);
        const auto p = xstate_params::create(a, b, c, d, e, f);
        CHECK(std::abs(concurrence(xstate(p)) - xstate_concurrence(p)) < 1e-10);
    }
}

TEST_CASE("uwe fixtures") {
    const witness_value mixed = uwe(moments(maximally_mixed()));
    CHECK(mixed.det_pt == doctest::Approx(1.0 / 256.0).epsilon(1e-13));
    CHECK(mixed.w == 0.0);

    const witness_value bell = uwe(moment_set{1.0, 1.0, 0.25, 0.25});
    CHECK(bell.det_pt == doctest::Approx(-1.0 / 16.0).epsilon(1e-14));
    CHECK(bell.w == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("negativity_from_moments: exact fixtures") {
    const negativity_result bell = negativity_from_moments(moment_set{1.0, 1.0, 0.25, 0.25});
    CHECK(bell.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bell.method == negativity_method::quartic_exact);

    const negativity_result mixed =
        negativity_from_moments(moments(maximally_mixed()));
    CHECK(mixed.value == 0.0);
    CHECK(mixed.method == negativity_method::quartic_exact);
}

TEST_CASE("quartic roots are -2 times the PT eigenvalues for exact moments") {
    rng r(808u);
    for (int i = 0; i < 300; ++i) {
        const density_matrix rho = random_density_matrix(r);
        const auto eig = hermitian_eigenvalues(partial_transpose(rho));
        const negativity_result res = negativity_from_moments(moments(rho));
        // match each root to some -2 lambda
        for (const auto& root : res.all_roots) {
            double best = 1e9;
            for (double v : eig) best = std::min(best, std::abs(root - cplx(-2.0 * v, 0.0)));
            CHECK(best < 1e-7);
        }
    }
}

TEST_CASE("moment-based negativity agrees with the spectral oracle on all ranks") {
    rng r(314159u);
    double worst = 0.0;
    int clamped = 0;
    for (int i = 0; i < 10000; ++i) {
        // Induced measures of every rank, pure states included.
        const int k = 1 + i % 4;
        const density_matrix rho = random_induced_density_matrix(r, k);
        const negativity_result res = negativity_from_moments(moments(rho));
        if (res.method == negativity_method::quartic_clamped) ++clamped;
        worst = std::max(worst, std::abs(res.value - negativity_spectral(rho)));
    }
    CHECK(worst < 1e-8);
    CHECK(clamped == 0);
}

TEST_CASE("exact-state moments satisfy pi1 = 1 and 1/4 <= pi2 <= 1") {
    rng r(161803u);
    for (int i = 0; i < 1000; ++i) {
        const moment_set m = moments(random_induced_density_matrix(r, 1 + i % 4));
        CHECK(std::abs(m.pi1 - 1.0) < 1e-12);
        CHECK(m.pi2 >= 0.25 - 1e-12);
        CHECK(m.pi2 <= 1.0 + 1e-12);
    }
}

TEST_CASE("witness stays within [-1/16, 1/256] on valid states") {
    CHECK(uwe(moments(bell_phi_plus())).det_pt ==
          doctest::Approx(-1.0 / 16.0).epsilon(1e-13));
    CHECK(uwe(moments(maximally_mixed())).det_pt ==
          doctest::Approx(1.0 / 256.0).epsilon(1e-13));
    rng r(271828u);
    for (int i = 0; i < 1000; ++i) {
        const double det =
            uwe(moments(random_induced_density_matrix(r, 1 + i % 4))).det_pt;
        CHECK(det >= -1.0 / 16.0 - 1e-12);
        CHECK(det <= 1.0 / 256.0 + 1e-12);
    }
}

TEST_CASE("quartic self-consistency: returned root has small residual") {
    rng r(2718u);
    for (int i = 0; i < 300; ++i) {
        const density_matrix rho = random_density_matrix(r);
        const moment_set m = moments(rho);
        const negativity_result res = negativity_from_moments(m);
        if (res.value <= 0.0) continue;
        const double det = uwe(m).det_pt;
        const double n = res.value;
        const double residual = 48.0 * det + 3.0 * std::pow(n, 4) + 6.0 * std::pow(n, 3) -
                                6.0 * n * n * (m.pi2 - 1.0) -
                                4.0 * n * (3.0 * m.pi2 - 2.0 * m.pi3 - 1.0);
        CHECK(std::abs(residual) < 1e-8);
    }
}

TEST_CASE("inconsistent moments fall back to a clamped root") {
    // Moments slightly "hotter" than any state: positive real root above 1.
    const moment_set m{1.0, 1.05, 0.3, 0.3};
    const negativity_result res = negativity_from_moments(m);
    CHECK(res.method == negativity_method::quartic_clamped);
    CHECK(res.value == doctest::Approx(1.0));
}

TEST_CASE("witness sign iff entanglement") {
    rng r(171717u);
    for (int i = 0; i < 2000; ++i) {
        const density_matrix rho = random_density_matrix(r);
        const double det = uwe(moments(rho)).det_pt;
        const double n = negativity_spectral(rho);
        if (det < -1e-10) CHECK(n > 0.0);
        if (n > 1e-10) CHECK(det < 1e-12);
        if (det > 1e-10) CHECK(n < 1e-7);
    }
}

TEST_CASE("bounds_from_witness: endpoints, frozen inverse point, domain errors") {
    const witness_bounds at0 = bounds_from_witness(0.0);
    CHECK(at0.lower == 0.0);
    CHECK(at0.upper == 0.0);

    const witness_bounds at1 = bounds_from_witness(1.0);
    CHECK(at1.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at1.upper == doctest::Approx(1.0).epsilon(1e-15));

    // Forward-evaluated oracle: w(1/2) = 0.5 * 2.5^3 / 27.
    const double w_half = 7.8125 / 27.0;
    CHECK(bounds_from_witness(w_half).lower == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(bounds_from_witness(-0.1), out_of_range);
    CHECK_THROWS_AS(bounds_from_witness(1.1), out_of_range);
}

TEST_CASE("lower bound inverts the Werner polynomial across [0, 1]") {
    for (int i = 0; i <= 2000; ++i) {
        const double w = static_cast<double>(i) / 2000.0;
        const double f = bounds_from_witness(w).lower;
        CHECK(std::abs(werner_witness_of_negativity(f) - w) < 1e-9);
    }
}

TEST_CASE("bound sandwich on random states") {
    rng r(5280u);
    for (int i = 0; i < 2000; ++i) {
        const density_matrix rho = random_density_matrix(r);
        const double n = negativity_spectral(rho);
        const witness_bounds b = bounds_from_witness(uwe(moments(rho)).w);
        CHECK(n >= b.lower - 1e-10);
        CHECK(n <= b.upper + 1e-10);
    }
}

TEST_CASE("pure states: w = N^4 = C^4 and E_F matches the Schmidt entropy") {
    rng r(1000003u);
    for (int i = 0; i < 500; ++i) {
        const density_matrix psi = random_pure_state(r);
        const double w = uwe(moments(psi)).w;
        const double n = negativity_spectral(psi);
        const double c = concurrence(psi);
        CHECK(std::abs(w - std::pow(n, 4)) < 1e-10);
        CHECK(std::abs(w - std::pow(c, 4)) < 1e-10);
        CHECK(std::abs(entanglement_of_formation_pure(w) -
                       ptest::schmidt_entanglement_entropy(psi)) < 1e-9);
    }
}

TEST_CASE("entanglement of formation: fixtures") {
    CHECK(entanglement_of_formation_pure(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entanglement_of_formation_pure(0.0) == 0.0);

    // Direct numeric evaluation of h((1 + sqrt(3)/2)/2) for w = 1/16.
    const double arg = 0.5 * (1.0 + std::sqrt(0.75));
    const double expected = -arg * std::log2(arg) - (1.0 - arg) * std::log2(1.0 - arg);
    CHECK(entanglement_of_formation_pure(1.0 / 16.0) ==
          doctest::Approx(expected).epsilon(1e-14));

    CHECK_THROWS_AS(entanglement_of_formation_pure(2.0), out_of_range);
}

TEST_CASE("w, N and C are invariant under local unitaries") {
    rng r(24601u);
    const density_matrix rho = random_density_matrix(r);
    const double w0 = uwe(moments(rho)).w;
    const double n0 = negativity_spectral(rho);
    const double c0 = concurrence(rho);
    for (int k = 0; k < 50; ++k) {
        const density_matrix rot = local_rotate(rho, random_su2(r), random_su2(r));
        CHECK(std::abs(uwe(moments(rot)).w - w0) < 1e-10);
        CHECK(std::abs(negativity_spectral(rot) - n0) < 1e-10);
        CHECK(std::abs(concurrence(rot) - c0) < 1e-10);
    }
}
