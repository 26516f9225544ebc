#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nld/coupling.hpp"
#include "nld/diagnostics.hpp"
#include "nld/spinor_field.hpp"

namespace nld {

/// Row-major 2x2 complex matrix acting on (psi+, psi-).
struct Mat2 {
    cplx a00, a01, a10, a11;
};

/// exp(-i H0(k) dt) for every grid wavenumber, H0(k) = [[m, ik], [-ik, -m]].
/// Uses the derivative wavenumbers, so the Nyquist mode propagates with k = 0.
std::vector<Mat2> linear_propagator(const Grid& grid, double m, double dt);

/// Exact or midpoint-frozen flow of i dt psi = N[psi] psi over `dt`, where N is
/// the bilinear-dependent (mass-free) part of the Hamiltonian. Exact whenever
/// alpha_w = alpha_sw = 0 or alpha_s = alpha_sw = 0; otherwise N is frozen at
/// a midpoint field obtained by two fixed-point iterations.
SpinorField nonlinear_substep(const SpinorField& field, const CouplingConfig& coupling, double dt);

/// Half nonlinear substep, full linear propagation in Fourier space, half
/// nonlinear substep.
SpinorField step_strang(const SpinorField& field, const CouplingConfig& coupling, double dt);

/// Classical four-stage Runge-Kutta on d(psi)/dt = rhs(psi).
SpinorField step_rk4(const SpinorField& field, const CouplingConfig& coupling, double dt);

enum class Scheme { RK4, Strang };

std::string_view scheme_name(Scheme scheme) noexcept;
Scheme parse_scheme(std::string_view name);

/// Spectral stability bound safety / (k_max + |m| + sum|alpha| * max V) for RK4.
double rk4_step_bound(const SpinorField& field, const CouplingConfig& coupling, double safety = 0.5);

/// Stepper that caches the linear propagator for the last step size used.
class Stepper {
public:
    Stepper(Grid grid, CouplingConfig coupling);

    const CouplingConfig& coupling() const noexcept { return coupling_; }

    SpinorField step(const SpinorField& field, double dt, Scheme scheme);
    SpinorField strang(const SpinorField& field, double dt);
    SpinorField rk4(const SpinorField& field, double dt) const;

private:
    const std::vector<Mat2>& propagator(double dt);

    Grid grid_;
    CouplingConfig coupling_;
    double cached_dt_ = 0.0;
    bool have_cache_ = false;
    std::vector<Mat2> cache_;
};

struct EvolveSpec {
    double dt = 1e-3;
    double t_final = 6.0;
    std::vector<double> snapshot_times{0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    Scheme scheme = Scheme::RK4;
    /// Diagnostics are recorded every this many steps, and at every snapshot.
    std::size_t diagnostics_every = 100;
    double cfl_safety = 0.5;
};

struct Snapshot {
    double t;
    SpinorField field;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;
    std::vector<DiagnosticsRecord> diagnostics;
    /// Non-fatal notes, e.g. RK4 step above the stability bound.
    std::vector<std::string> warnings;
    std::size_t steps = 0;
};

/// Advance `initial` to spec.t_final, landing exactly on every snapshot time by
/// shortening the step that precedes it. Throws NumericalFailure (carrying the
/// last time at which the field was finite) if the field stops being finite.
Trajectory evolve(const SpinorField& initial, const CouplingConfig& coupling, const EvolveSpec& spec);

}  // namespace nld
