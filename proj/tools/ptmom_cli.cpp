// ptmom command-line front end: state measurement reports, Makhlin
// invariants, X-state surveys and sweeps, Monte-Carlo noise studies, and the
// LOCC/convexity counterexamples. JSON goes to stdout, CSV to --out,
// diagnostics to stderr. Exit codes: 0 success, 1 validation/input error,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptmom/ptmom.hpp"
#include "ptmom/state_io.hpp"

using nlohmann::json;
using namespace ptmom;

namespace {

std::string csv_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

density_matrix load_state(const std::string& path) {
    if (path == "-") return read_state(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    return read_state(in);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file '" + path + "'");
    return out;
}

json moments_json(const moment_set& m) {
    return json{{"pi1", m.pi1}, {"pi2", m.pi2}, {"pi3", m.pi3}, {"pi4", m.pi4}};
}

const char* method_name(negativity_method m) {
    switch (m) {
    case negativity_method::spectral: return "spectral";
    case negativity_method::quartic_exact: return "quartic_exact";
    default: return "quartic_clamped";
    }
}

json xparams_json(const xstate_params& p) {
    return json{{"a", p.a},
                {"b", {p.b.real(), p.b.imag()}},
                {"c", p.c},
                {"d", {p.d.real(), p.d.imag()}},
                {"e", p.e},
                {"f", p.f}};
}

int run_measure(const std::string& in_path) {
    const density_matrix rho = load_state(in_path);
    const moment_set m = moments(rho);
    const witness_value wit = uwe(m);
    const negativity_result nm = negativity_from_moments(m);
    const witness_bounds wb = bounds_from_witness(wit.w);
    json report{{"N_spectral", negativity_spectral(rho)},
                {"N_from_moments", nm.value},
                {"method", method_name(nm.method)},
                {"C", concurrence(rho)},
                {"W", wit.det_pt},
                {"w", wit.w},
                {"lower_bound", wb.lower},
                {"upper_bound", wb.upper},
                {"moments", moments_json(m)}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_invariants(const std::string& in_path) {
    const density_matrix rho = load_state(in_path);
    const invariant_set inv = makhlin_invariants(bloch_decompose(rho));
    const derived_invariant_set d = derived_invariants(inv);
    json report{{"invariants",
                 {{"I1", inv.i1},
                  {"I2", inv.i2},
                  {"I3", inv.i3},
                  {"I4", inv.i4},
                  {"I5", inv.i5},
                  {"I7", inv.i7},
                  {"I8", inv.i8},
                  {"I12", inv.i12},
                  {"I14", inv.i14}}},
                {"derived",
                 {{"x1", d.x1},
                  {"x2", d.x2},
                  {"x3", d.x3},
                  {"x4", d.x4},
                  {"y1", d.y1},
                  {"y2", d.y2},
                  {"y3", d.y3},
                  {"y4", d.y4},
                  {"y5", d.y5},
                  {"y6", d.y6}}},
                {"moments_from_invariants", moments_json(moments_from_invariants(d))}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_xstate_single(int case_id, const std::vector<double>& params,
                      const std::string& out_path) {
    const case_report rep = verify_case(case_id, params);
    const density_matrix rho = xstate(rep.params);
    json report{
        {"case", case_id},
        {"params", xparams_json(rep.params)},
        {"state", matrix_to_json(rho.matrix())},
        {"prediction",
         {{"pi2", rep.prediction.pi2},
          {"pi3", rep.prediction.pi3},
          {"pi4", rep.prediction.pi4},
          {"W", rep.prediction.w_det},
          {"C", rep.prediction.c},
          {"N", rep.prediction.n},
          {"N_source", rep.prediction.n_from_spectral ? "spectral" : "closed_form"}}},
        {"verify",
         {{"dev_pi2", rep.dev_pi2},
          {"dev_pi3", rep.dev_pi3},
          {"dev_pi4", rep.dev_pi4},
          {"dev_W", rep.dev_w},
          {"dev_factored_W", rep.dev_factored_w},
          {"dev_C", rep.dev_c},
          {"dev_N", rep.dev_n},
          {"dev_canonical", rep.dev_canonical},
          {"canonical_rank", rep.canonical_rank},
          {"max_deviation", rep.max_deviation}}}};
    std::cout << report.dump(2) << '\n';
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        write_state(out, rho);
    }
    return 0;
}

int run_xstate_sweep(int case_id, int n, const std::string& out_path) {
    auto out = open_output(out_path);
    out << "case,param1,param2,N,C,w,lower_bound,upper_bound\n";
    for (const auto& params : sweep_case_parameters(case_id, n)) {
        const xstate_params p = case_family(case_id, params);
        const density_matrix rho = xstate(p);
        const double n_val = negativity_spectral(rho);
        const double c_val = xstate_concurrence(p);
        const double w_val = uwe(moments(rho)).w;
        const witness_bounds wb = bounds_from_witness(w_val);
        out << case_id << ',' << csv_num(params[0]) << ','
            << csv_num(params.size() > 1 ? params[1] : 0.0) << ',' << csv_num(n_val)
            << ',' << csv_num(c_val) << ',' << csv_num(w_val) << ',' << csv_num(wb.lower)
            << ',' << csv_num(wb.upper) << '\n';
    }
    std::cerr << "wrote " << out_path << '\n';
    return 0;
}

int run_noise_study(const std::string& quantity, int n, double rel_noise,
                    std::uint64_t seed, const std::string& ensemble_name,
                    const std::string& out_path) {
    const study_ensemble ens = ensemble_name == "hs" ? study_ensemble::hilbert_schmidt
                                                     : study_ensemble::full_range;
    const noise_spec spec{rel_noise, seed};
    const auto records = quantity == "witness" ? witness_noise_study(n, spec, ens)
                                               : negativity_noise_study(n, spec, ens);
    auto out = open_output(out_path);
    out << "# quantity=" << quantity << " noise=uniform rel_noise=" << csv_num(rel_noise)
        << " seed=" << seed << " ensemble=" << ensemble_name << " n=" << n << '\n';
    out << "n_theory,n_experiment,w_theory,w_experiment\n";
    for (const auto& rec : records)
        out << csv_num(rec.n_theory) << ',' << csv_num(rec.n_experiment) << ','
            << csv_num(rec.w_theory) << ',' << csv_num(rec.w_experiment) << '\n';
    std::cerr << "wrote " << out_path << '\n';
    return 0;
}

int run_counterexample(const std::string& which) {
    if (which == "locc") {
        const locc_report rep = locc_counterexample();
        json report{{"p", rep.p},
                    {"w_before", rep.w_before},
                    {"w_after", rep.w_after},
                    {"violated", rep.violated}};
        std::cout << report.dump(2) << '\n';
        std::cout << (rep.violated ? "PASS" : "FAIL")
                  << ": twirling raised the witness\n";
        return rep.violated ? 0 : 1;
    }
    const convexity_report rep = convexity_counterexample();
    json report{{"w_rho1", rep.w_rho1},
                {"w_rho2", rep.w_rho2},
                {"w_mix", rep.w_mix},
                {"violated", rep.violated}};
    std::cout << report.dump(2) << '\n';
    std::cout << (rep.violated ? "PASS" : "FAIL")
              << ": mixing raised the witness above the convex combination\n";
    return rep.violated ? 0 : 1;
}

int run_random(std::uint64_t seed, const std::string& measure,
               const std::string& out_path) {
    if (measure == "bures")
        throw input_error("the Bures measure is not implemented; use --measure hs");
    rng r(seed);
    const density_matrix rho = random_density_matrix(r);
    if (out_path.empty()) {
        write_state(std::cout, rho);
    } else {
        auto out = open_output(out_path);
        write_state(out, rho);
        std::cerr << "wrote " << out_path << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit entanglement from moments of the partially "
                 "transposed density matrix"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path;
    std::string quantity = "negativity";
    std::string ensemble_name = "full-range";
    std::string measure_name = "hs";
    std::string which_counterexample;
    int case_id = 1;
    int sweep_case = 0;
    int count = 10000;
    int sweep_n = 50;
    double rel_noise = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> params;

    auto* measure_cmd = app.add_subcommand("measure", "entanglement report for a state");
    measure_cmd->add_option("--in", in_path, "state JSON file, '-' for stdin")->required();

    auto* inv_cmd = app.add_subcommand("invariants", "Makhlin invariants of a state");
    inv_cmd->add_option("--in", in_path, "state JSON file, '-' for stdin")->required();

    auto* x_cmd = app.add_subcommand("xstate", "X-state survey families");
    auto* case_opt = x_cmd->add_option("--case", case_id, "case id 1..8");
    auto* sweep_opt = x_cmd->add_option("--sweep", sweep_case, "sweep case id 1..8");
    x_cmd->add_option("--params", params, "free parameters of the case");
    x_cmd->add_option("--n", sweep_n, "number of sweep points");
    x_cmd->add_option("--out", out_path, "state JSON (with --case) or CSV (with --sweep)");
    case_opt->excludes(sweep_opt);

    auto* noise_cmd = app.add_subcommand("noise-study", "Monte-Carlo moment-noise study");
    noise_cmd->add_option("--quantity", quantity, "negativity or witness")
        ->check(CLI::IsMember({"negativity", "witness"}));
    noise_cmd->add_option("--n", count, "number of random states");
    noise_cmd->add_option("--rel-noise", rel_noise, "maximal relative moment noise")
        ->required();
    noise_cmd->add_option("--seed", seed, "study seed");
    noise_cmd->add_option("--ensemble", ensemble_name, "full-range or hs")
        ->check(CLI::IsMember({"full-range", "hs"}));
    noise_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* ce_cmd = app.add_subcommand("counterexample", "LOCC/convexity violations");
    ce_cmd->add_option("which", which_counterexample, "locc or convexity")
        ->required()
        ->check(CLI::IsMember({"locc", "convexity"}));

    auto* rand_cmd = app.add_subcommand("random", "emit a random density matrix");
    rand_cmd->add_option("--seed", seed, "generator seed");
    rand_cmd->add_option("--measure", measure_name, "hs (Bures not implemented)")
        ->check(CLI::IsMember({"hs", "bures"}));
    rand_cmd->add_option("--out", out_path, "output JSON path, stdout if omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (measure_cmd->parsed()) return run_measure(in_path);
        if (inv_cmd->parsed()) return run_invariants(in_path);
        if (x_cmd->parsed()) {
            if (sweep_opt->count() > 0)
                return run_xstate_sweep(sweep_case, sweep_n,
                                        out_path.empty() ? "sweep.csv" : out_path);
            if (case_opt->count() == 0) {
                std::cerr << "xstate requires --case or --sweep\n";
                return 2;
            }
            return run_xstate_single(case_id, params, out_path);
        }
        if (noise_cmd->parsed())
            return run_noise_study(quantity, count, rel_noise, seed, ensemble_name,
                                   out_path);
        if (ce_cmd->parsed()) return run_counterexample(which_counterexample);
        if (rand_cmd->parsed()) return run_random(seed, measure_name, out_path);
    } catch (const ptmom::error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}
