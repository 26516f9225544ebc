#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nld/coupling.hpp"
#include "nld/grid.hpp"
#include "nld/spinor_field.hpp"

namespace nld {

/// Which component is even (and nonzero) at x = 0.
enum class ProfileParity {
    UpperEven,  ///< A even with A(0) = a > 0, B odd
    LowerEven,  ///< B even with B(0) = b > 0, A odd
};

/// Real solitary-wave profile psi(t, x) = exp(-i omega t) (A(x), B(x)).
struct StationaryProfile {
    double omega;
    Grid grid;
    std::vector<double> A;
    std::vector<double> B;
    ProfileParity parity;
    /// Value of the even component at x = 0.
    double central_amplitude;
    /// Max-norm of (A' - F_A, B' - F_B) on the grid, derivatives taken spectrally.
    double residual;

    SpinorField to_field(double t = 0.0) const;
};

/// Right-hand side of the stationary first-order system obtained by
/// substituting psi = exp(-i omega t)(A, B) into the alpha_w = alpha_sw = 0
/// dynamics:
///   A' = (-m - omega + a_- A^2 + a_+ B^2) B
///   B' = ( omega - m - a_+ A^2 - a_- B^2) A
/// with a_+- = alpha_v +- alpha_s. Throws UnsupportedMode for alpha_w or
/// alpha_sw nonzero.
std::pair<double, double> stationary_odes(double A, double B, const CouplingConfig& coupling,
                                          double omega);

/// kappa = sqrt(m^2 - omega^2); throws NonLocalizable when |omega| >= |m|.
double decay_rate(double m, double omega);

struct ShootOptions {
    /// Upper end of the amplitude bracket; default 10 sqrt(m / |alpha|).
    std::optional<double> a_max;
    /// Length of the half-line used by the shooting functional; default 25 / kappa.
    std::optional<double> x_max;
};

/// Solve for a localized profile by bisection on the central amplitude. The
/// upper-even family is tried first, then the lower-even family. Throws
/// NoSolutionFound if neither family brackets a solution or the final ODE
/// residual on `grid` exceeds `tolerance`.
StationaryProfile shoot(const CouplingConfig& coupling, double omega, double tolerance,
                        const Grid& grid, const ShootOptions& options = {});

}  // namespace nld
