#include "nld/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nld/check_suite.hpp"
#include "nld/config.hpp"
#include "nld/conformal.hpp"
#include "nld/errors.hpp"
#include "nld/integrators.hpp"
#include "nld/snapshot_io.hpp"
#include "nld/stationary.hpp"
#include "nld/version.hpp"

namespace nld {

namespace fs = std::filesystem;

namespace {

SnapshotInfo info_for(const RunConfig& cfg) {
    return {cfg.coupling(), std::string(mode_name(cfg.mode)), cfg.scheme, cfg.dt};
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
    const CouplingConfig coupling = cfg.coupling();
    const SpinorField psi0 = initial_state(cfg.grid(), cfg.a_plus, cfg.a_minus, cfg.mu);
    const Trajectory traj = evolve(psi0, coupling, cfg.evolve_spec());

    fs::create_directories(cfg.output_dir);
    const SnapshotInfo info = info_for(cfg);
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
        const auto path = cfg.output_dir / fmt::format("snapshot_{:03d}.csv", i);
        write_snapshot(traj.snapshots[i].field, traj.snapshots[i].t, path, info);
    }
    write_diagnostics(traj.diagnostics, cfg.output_dir / "diagnostics.csv");
    for (const auto& w : traj.warnings) out << "warning: " << w << '\n';

    const auto& first = traj.diagnostics.front();
    const auto& last = traj.diagnostics.back();
    out << fmt::format("mode {} ({}), scheme {}, {} steps\n", mode_name(cfg.mode), describe(coupling),
                       scheme_name(cfg.scheme), traj.steps);
    out << fmt::format("wrote {} snapshots to {}\n", traj.snapshots.size(), cfg.output_dir.string());
    out << fmt::format("charge {:.12g} -> {:.12g}, energy {:.12g} -> {:.12g}\n", first.charge,
                       last.charge, first.energy, last.energy);
    return exit_success;
}

int cmd_stationary(const RunConfig& cfg, std::ostream& out) {
    const CouplingConfig coupling = cfg.coupling();
    const Grid grid = cfg.grid();
    const StationaryProfile profile = shoot(coupling, cfg.omega, cfg.tolerance, grid);

    fs::create_directories(cfg.output_dir);
    write_snapshot(profile.to_field(), 0.0, cfg.output_dir / "stationary_profile.csv",
                   info_for(cfg));

    EvolveSpec spec = cfg.evolve_spec();
    spec.snapshot_times = {0.0, cfg.t_final};
    if (cfg.t_final == 0.0) spec.snapshot_times = {0.0};
    const Trajectory traj = evolve(profile.to_field(), coupling, spec);
    const SpinorField& psi0 = traj.snapshots.front().field;
    const SpinorField& psiT = traj.snapshots.back().field;
    double modulus_drift = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        modulus_drift = std::max(modulus_drift, std::abs(std::abs(psiT.plus()[j]) - std::abs(psi0.plus()[j])));
        modulus_drift = std::max(modulus_drift, std::abs(std::abs(psiT.minus()[j]) - std::abs(psi0.minus()[j])));
    }
    const std::size_t center = grid.nearest_index(0.0);
    const bool upper = profile.parity == ProfileParity::UpperEven;
    const cplx c0 = upper ? psi0.plus()[center] : psi0.minus()[center];
    const cplx cT = upper ? psiT.plus()[center] : psiT.minus()[center];
    const double phase = std::arg(cT / c0);
    const double expected = std::remainder(-cfg.omega * cfg.t_final, 2.0 * std::numbers::pi);
    const double phase_error = std::abs(std::remainder(phase - expected, 2.0 * std::numbers::pi));

    std::ofstream report(cfg.output_dir / "stationary_report.txt");
    const std::string text = fmt::format(
        "omega = {:.17g}\n"
        "parity = {}\n"
        "central_amplitude = {:.17g}\n"
        "kappa = {:.17g}\n"
        "ode_residual = {:.6g}\n"
        "evolved_to = {:.17g}\n"
        "scheme = {}\n"
        "max_modulus_drift = {:.6g}\n"
        "center_phase_error = {:.6g}\n",
        profile.omega, upper ? "upper-even" : "lower-even", profile.central_amplitude,
        decay_rate(coupling.m, profile.omega), profile.residual, cfg.t_final,
        scheme_name(cfg.scheme), modulus_drift, phase_error);
    report << text;
    out << text;
    return exit_success;
}

int cmd_exponents(int n_max, std::ostream& out) {
    out << format_exponent_table(exponent_table(2, n_max));
    out << "\nquartic terms in 1+1:\n";
    for (const auto& term : quartic_terms_1p1())
        out << fmt::format("  {:<4} {:<44} -> {}\n", term.name, term.bilinear_form,
                           parameter_name(term.drives));
    return exit_success;
}

int cmd_check(std::ostream& out) {
    bool ok = true;
    for (const auto& r : run_check_suite()) {
        out << fmt::format("[{}] {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
        ok = ok && r.passed;
    }
    out << (ok ? "all checks passed\n" : "check suite FAILED\n");
    return ok ? exit_success : exit_check_failed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quartic nonlinear Dirac equation toolkit (1+1 dimensions)", "nldirac"};
    app.set_version_flag("--version", toolkit_version);
    app.require_subcommand(1);

    std::string run_config;
    auto* run = app.add_subcommand("run", "Evolve the configured initial state");
    run->add_option("config", run_config, "Configuration file (key = value)")->required();

    std::string stationary_config;
    auto* stationary = app.add_subcommand("stationary", "Shoot a solitary-wave profile");
    stationary->add_option("config", stationary_config, "Configuration file (key = value)")->required();

    int n_max = 4;
    auto* exponents = app.add_subcommand("exponents", "Print conformal degrees and exponents");
    exponents->add_option("--n-max", n_max, "Largest space-time dimension")->check(CLI::Range(2, 64));

    auto* check = app.add_subcommand("check", "Run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    auto load = [&](const std::string& path, RunConfig& cfg) -> bool {
        try {
            cfg = load_config(path);
            (void)cfg.coupling();
            (void)cfg.grid();
            return true;
        } catch (const Error& e) {
            err << "config error: " << e.what() << '\n';
            return false;
        }
    };

    try {
        if (*run) {
            RunConfig cfg;
            if (!load(run_config, cfg)) return exit_config;
            return cmd_run(cfg, out);
        }
        if (*stationary) {
            RunConfig cfg;
            if (!load(stationary_config, cfg)) return exit_config;
            return cmd_stationary(cfg, out);
        }
        if (*exponents) return cmd_exponents(n_max, out);
        if (*check) return cmd_check(out);
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << " (last good t = " << e.last_good_time() << ")\n";
        return exit_numerical;
    } catch (const NoSolutionFound& e) {
        err << "no stationary solution: " << e.what() << '\n';
        return exit_numerical;
    } catch (const NonLocalizable& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const UnsupportedMode& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const InvalidParameter& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_usage;
}

}  // namespace nld
