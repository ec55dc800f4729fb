// Acceptance suite: runs every top-level correctness criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ptmom/ptmom.hpp"
#include "test_support.hpp"

using namespace ptmom;

namespace {

struct outcome {
    bool pass = true;
    std::string detail;
};

double stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return std::nan("");
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / (static_cast<double>(xs.size()) - 1.0));
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

outcome appendix_b_locc() {
    const locc_report rep = locc_counterexample();
    outcome out;
    out.pass = std::abs(rep.w_before - 0.11719) <= 1e-4 &&
               std::abs(rep.w_after - 0.16294) <= 1e-4 && rep.w_before < rep.w_after;
    out.detail = "w_before=" + fmt(rep.w_before) + " w_after=" + fmt(rep.w_after);
    return out;
}

outcome appendix_c_convexity() {
    const convexity_report rep = convexity_counterexample();
    outcome out;
    const double tol = 1e-12;
    out.pass = std::abs(rep.w_rho1 - 0.015625) <= tol &&
               std::abs(rep.w_rho2 - 0.015625) <= tol &&
               std::abs(rep.w_mix - 0.03125) <= tol &&
               rep.w_mix > 0.5 * (rep.w_rho1 + rep.w_rho2);
    out.detail = "w1=" + fmt(rep.w_rho1) + " w2=" + fmt(rep.w_rho2) +
                 " w_mix=" + fmt(rep.w_mix);
    return out;
}

outcome quartic_vs_spectral() {
    outcome out;
    double worst = 0.0;
    int clamped = 0;
    for (int i = 0; i < 10000; ++i) {
        rng r = rng::substream(1001u, static_cast<std::uint64_t>(i));
        const density_matrix rho = random_density_matrix(r);
        const negativity_result res = negativity_from_moments(moments(rho));
        if (res.method == negativity_method::quartic_clamped) ++clamped;
        worst = std::max(worst, std::abs(res.value - negativity_spectral(rho)));
    }
    out.pass = worst <= 1e-8 && clamped == 0;
    out.detail = "max |N_mom - N_spec| = " + fmt(worst) + ", clamped = " +
                 std::to_string(clamped);
    return out;
}

outcome invariant_identity_chain() {
    outcome out;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        rng r = rng::substream(1002u, static_cast<std::uint64_t>(i));
        const density_matrix rho = random_density_matrix(r);
        const moment_set direct = moments(rho);
        const moment_set via = moments_from_invariants(
            derived_invariants(makhlin_invariants(bloch_decompose(rho))));
        worst = std::max({worst, std::abs(direct.pi2 - via.pi2),
                          std::abs(direct.pi3 - via.pi3), std::abs(direct.pi4 - via.pi4)});
    }
    out.pass = worst <= 1e-10;
    out.detail = "max componentwise deviation = " + fmt(worst);
    return out;
}

outcome survey_closed_forms() {
    outcome out;
    double worst = 0.0;
    int worst_case = 0;
    for (int case_id = 1; case_id <= 8; ++case_id) {
        for (const auto& params : sweep_case_parameters(case_id, 50)) {
            const case_report rep = verify_case(case_id, params);
            double dev = std::max({rep.dev_pi2, rep.dev_pi3, rep.dev_pi4, rep.dev_w,
                                   rep.dev_c, rep.dev_n});
            if (dev > worst) {
                worst = dev;
                worst_case = case_id;
            }
        }
    }
    out.pass = worst <= 1e-9;
    out.detail = "worst deviation " + fmt(worst) + " (case " +
                 std::to_string(worst_case) + ")";
    return out;
}

outcome witness_bounds_sandwich() {
    outcome out;
    double worst_violation = 0.0;
    for (int i = 0; i < 10000; ++i) {
        rng r = rng::substream(1003u, static_cast<std::uint64_t>(i));
        const density_matrix rho = random_density_matrix(r);
        const double n = negativity_spectral(rho);
        const witness_bounds b = bounds_from_witness(uwe(moments(rho)).w);
        worst_violation = std::max(worst_violation, b.lower - n);
        worst_violation = std::max(worst_violation, n - b.upper);
    }
    double worst_upper_sat = 0.0;
    for (int i = 0; i < 1000; ++i) {
        rng r = rng::substream(1004u, static_cast<std::uint64_t>(i));
        const density_matrix psi = random_pure_state(r);
        const double n = negativity_spectral(psi);
        const double w = uwe(moments(psi)).w;
        worst_upper_sat = std::max(worst_upper_sat,
                                   std::abs(n - bounds_from_witness(w).upper));
    }
    double worst_lower_sat = 0.0;
    double worst_poly = 0.0;
    for (const auto& params : sweep_case_parameters(8, 50)) {
        const density_matrix rho = xstate(case_family(8, params));
        const double n = negativity_spectral(rho);
        const double w = uwe(moments(rho)).w;
        worst_lower_sat = std::max(worst_lower_sat,
                                   std::abs(n - bounds_from_witness(w).lower));
        worst_poly = std::max(worst_poly, std::abs(w - werner_witness_of_negativity(n)));
    }
    out.pass = worst_violation <= 1e-10 && worst_upper_sat <= 1e-9 &&
               worst_lower_sat <= 1e-9 && worst_poly <= 1e-10;
    out.detail = "sandwich slack " + fmt(worst_violation) + ", pure saturation " +
                 fmt(worst_upper_sat) + ", Werner saturation " + fmt(worst_lower_sat);
    return out;
}

outcome pure_state_coincidence() {
    outcome out;
    double worst_pow = 0.0;
    double worst_ef = 0.0;
    for (int i = 0; i < 1000; ++i) {
        rng r = rng::substream(1005u, static_cast<std::uint64_t>(i));
        const density_matrix psi = random_pure_state(r);
        const double w = uwe(moments(psi)).w;
        const double n = negativity_spectral(psi);
        const double c = concurrence(psi);
        worst_pow = std::max({worst_pow, std::abs(w - std::pow(n, 4)),
                              std::abs(w - std::pow(c, 4))});
        worst_ef = std::max(worst_ef, std::abs(entanglement_of_formation_pure(w) -
                                               ptest::schmidt_entanglement_entropy(psi)));
    }
    out.pass = worst_pow <= 1e-10 && worst_ef <= 1e-9;
    out.detail = "max |w - N^4|,|w - C^4| = " + fmt(worst_pow) +
                 ", max E_F deviation = " + fmt(worst_ef);
    return out;
}

struct bin_spreads {
    double low = std::nan("");
    double high = std::nan("");
    int n_low = 0;
    int n_high = 0;
};

bin_spreads spreads_at(double rel_noise, std::uint64_t seed, int n) {
    const auto records = negativity_noise_study(n, noise_spec{rel_noise, seed});
    std::vector<double> low, high;
    for (const auto& rec : records) {
        const double err = rec.n_experiment - rec.n_theory;
        if (rec.n_theory <= 0.1) low.push_back(err);
        if (rec.n_theory >= 0.9) high.push_back(err);
    }
    bin_spreads s;
    s.n_low = static_cast<int>(low.size());
    s.n_high = static_cast<int>(high.size());
    s.low = stddev(low);
    s.high = stddev(high);
    return s;
}

outcome negativity_noise_profile() {
    outcome out;
    const std::uint64_t seed = 20240815u;
    const bin_spreads coarse = spreads_at(1e-2, seed, 10000);
    const bin_spreads fine = spreads_at(1e-3, seed, 10000);
    if (coarse.n_low < 2 || coarse.n_high < 2) {
        out.pass = false;
        out.detail = "bins underpopulated: low " + std::to_string(coarse.n_low) +
                     ", high " + std::to_string(coarse.n_high);
        return out;
    }
    const bool ordering = coarse.low > coarse.high;
    const bool shrink_low = coarse.low >= 3.0 * fine.low;
    const bool shrink_high = coarse.high >= 3.0 * fine.high;
    out.pass = ordering && shrink_low && shrink_high;
    out.detail = "std[0,0.1]=" + fmt(coarse.low) + " (n=" + std::to_string(coarse.n_low) +
                 ") vs std[0.9,1]=" + fmt(coarse.high) + " (n=" +
                 std::to_string(coarse.n_high) + "); shrink x" +
                 fmt(coarse.low / fine.low) + " / x" + fmt(coarse.high / fine.high);
    return out;
}

outcome witness_noise_profile() {
    outcome out;
    const auto records = noise_study(10000, noise_spec{1e-2, 20240815u});
    double max_w_err = 0.0, max_n_err = 0.0;
    for (const auto& rec : records) {
        max_w_err = std::max(max_w_err, std::abs(rec.w_experiment - rec.w_theory));
        max_n_err = std::max(max_n_err, std::abs(rec.n_experiment - rec.n_theory));
    }
    out.pass = max_w_err < max_n_err;
    out.detail = "max |w err| = " + fmt(max_w_err) + " < max |N err| = " + fmt(max_n_err);
    return out;
}

outcome local_unitary_invariance() {
    outcome out;
    double worst = 0.0;
    rng unitary_stream(1006u);
    for (int i = 0; i < 100; ++i) {
        rng r = rng::substream(1007u, static_cast<std::uint64_t>(i));
        const density_matrix rho = random_density_matrix(r);
        const double w0 = uwe(moments(rho)).w;
        const double n0 = negativity_spectral(rho);
        const double c0 = concurrence(rho);
        const invariant_set ref = makhlin_invariants(bloch_decompose(rho));
        for (int k = 0; k < 10; ++k) {
            const density_matrix rot =
                local_rotate(rho, random_su2(unitary_stream), random_su2(unitary_stream));
            const invariant_set inv = makhlin_invariants(bloch_decompose(rot));
            worst = std::max({worst, std::abs(uwe(moments(rot)).w - w0),
                              std::abs(negativity_spectral(rot) - n0),
                              std::abs(concurrence(rot) - c0), std::abs(inv.i1 - ref.i1),
                              std::abs(inv.i2 - ref.i2), std::abs(inv.i3 - ref.i3),
                              std::abs(inv.i4 - ref.i4), std::abs(inv.i5 - ref.i5),
                              std::abs(inv.i7 - ref.i7), std::abs(inv.i8 - ref.i8),
                              std::abs(inv.i12 - ref.i12), std::abs(inv.i14 - ref.i14)});
        }
    }
    out.pass = worst < 1e-10;
    out.detail = "worst change " + fmt(worst);
    return out;
}

} // namespace

int main() {
    struct criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<outcome()> run;
    };
    const std::vector<criterion> criteria{
        {1, "twirling raises the witness (LOCC violation values)", 1.0, appendix_b_locc},
        {2, "mixing doubles the witness (convexity violation values)", 1.0,
         appendix_c_convexity},
        {3, "moment quartic equals spectral negativity on 10^4 states", 30.0,
         quartic_vs_spectral},
        {4, "invariant-reconstructed moments equal trace powers on 10^4 states", 30.0,
         invariant_identity_chain},
        {5, "survey closed forms match numerics over 50-point sweeps", 10.0,
         survey_closed_forms},
        {6, "f(w) <= N <= w^(1/4) with pure/Werner saturation", 30.0,
         witness_bounds_sandwich},
        {7, "pure states: w = N^4 = C^4 and E_F from Schmidt entropy", 30.0,
         pure_state_coincidence},
        {8, "noise spread concentrates at N ~ 0 and scales with the bound", 60.0,
         negativity_noise_profile},
        {9, "witness estimation is less noise-prone than negativity", 60.0,
         witness_noise_profile},
        {10, "w, N, C and all nine invariants are local-unitary invariant", 30.0,
         local_unitary_invariance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        outcome out;
        try {
            out = c.run();
        } catch (const std::exception& ex) {
            out.pass = false;
            out.detail = std::string("exception: ") + ex.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (seconds > c.budget_seconds) {
            out.pass = false;
            out.detail += " [over time budget]";
        }
        if (!out.pass) ++failures;
        std::printf("%s  %2d  %s  (%s; %.2f s)\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, out.detail.c_str(), seconds);
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
