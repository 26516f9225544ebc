#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nld/coupling.hpp"
#include "nld/grid.hpp"
#include "nld/integrators.hpp"

namespace nld {

/// Everything needed to reproduce a run. Defaults are the spin-symmetric
/// reference configuration: m = 1, alpha = 0.5, mu = 1, A+- = +-1, box
/// [-40, 40) with 1024 points, RK4 with dt = 1e-3, snapshots at
/// t = 0, 0.5, 1, 2, 3, 4, 5, 6.
struct RunConfig {
    Mode mode = Mode::SpinSymmetric;
    /// Parameter of the single-parameter modes (see ModePreset).
    double alpha = 0.5;
    /// Couplings of the general mode.
    CouplingConfig general{};
    double m = 1.0;

    double x_min = -40.0;
    double x_max = 40.0;
    std::size_t n_points = 1024;

    double a_plus = 1.0;
    double a_minus = -1.0;
    double mu = 1.0;

    Scheme scheme = Scheme::RK4;
    double dt = 1e-3;
    double t_final = 6.0;
    std::vector<double> snapshot_times{0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    std::size_t diagnostics_every = 100;

    std::filesystem::path output_dir = "output";
    bool deterministic = true;

    /// Stationary-profile settings.
    double omega = 0.8;
    double tolerance = 1e-8;

    ModePreset preset() const;
    CouplingConfig coupling() const;
    Grid grid() const;
    EvolveSpec evolve_spec() const;
};

/// Parse `key = value` lines (`#` starts a comment). Unknown keys, keys that
/// do not belong to the selected mode, duplicates, malformed lines and
/// non-finite numbers raise ParseError carrying the 1-based line number.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::filesystem::path& path);

/// Keys understood by parse_config, in documentation order.
const std::vector<std::string_view>& config_keys();

}  // namespace nld
