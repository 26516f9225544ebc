#include "nld/stationary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include <boost/numeric/odeint.hpp>
#include <fmt/format.h>

#include "nld/errors.hpp"

namespace nld {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

constexpr double ode_abs_tol = 1e-14;
constexpr double ode_rel_tol = 1e-13;
// Below this fraction of the central amplitude the orbit is continued as a pure
// exponential decay; further out, integration error feeds the growing mode.
constexpr double tail_switch = 1e-4;

struct StationarySystem {
    CouplingConfig c;
    double omega;

    void operator()(const State& y, State& dy, double /*x*/) const {
        const auto [da, db] = stationary_odes(y[0], y[1], c, omega);
        dy[0] = da;
        dy[1] = db;
    }
};

enum class Outcome { PrimaryZero, SecondaryZero, Escaped, Reached };

struct Family {
    ProfileParity parity;
    std::size_t primary;    // index of the even component
    std::size_t secondary;  // index of the odd component
};

constexpr Family upper_even{ProfileParity::UpperEven, 0, 1};
constexpr Family lower_even{ProfileParity::LowerEven, 1, 0};

State start_state(const Family& fam, double amp) {
    State y{0.0, 0.0};
    y[fam.primary] = amp;
    return y;
}

auto make_stepper() {
    return odeint::make_controlled(ode_abs_tol, ode_rel_tol, odeint::runge_kutta_dopri5<State>());
}

// Integrate from x = 0 until one component reaches zero (x > 0), the orbit
// escapes, or x_end is reached.
Outcome classify(const StationarySystem& sys, const Family& fam, double amp, double x_end,
                 double escape_radius) {
    auto stepper = make_stepper();
    State y = start_state(fam, amp);
    double x = 0.0;
    double h = 1e-3 / (1.0 + std::abs(sys.c.m));
    while (x < x_end) {
        h = std::min(h, x_end - x);
        if (stepper.try_step(sys, y, x, h) == odeint::fail) continue;
        if (y[fam.secondary] <= 0.0) return Outcome::SecondaryZero;
        if (y[fam.primary] <= 0.0) return Outcome::PrimaryZero;
        if (std::hypot(y[0], y[1]) > escape_radius) return Outcome::Escaped;
    }
    return Outcome::Reached;
}

// +1: overshoot (primary reaches zero or the orbit escapes), -1: undershoot
// (secondary falls back to zero), 0: still decaying at x_end.
int shooting_sign(Outcome o) {
    switch (o) {
        case Outcome::PrimaryZero:
        case Outcome::Escaped: return +1;
        case Outcome::SecondaryZero: return -1;
        case Outcome::Reached: return 0;
    }
    return 0;
}

std::optional<double> bisect(const StationarySystem& sys, const Family& fam, double a_max,
                             double x_end) {
    const double escape = 10.0 * a_max + 10.0;
    double lo = 1e-6 * a_max;
    double hi = a_max;
    if (shooting_sign(classify(sys, fam, lo, x_end, escape)) != -1) return std::nullopt;
    if (shooting_sign(classify(sys, fam, hi, x_end, escape)) != +1) return std::nullopt;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const int s = shooting_sign(classify(sys, fam, mid, x_end, escape));
        if (s == 0) return mid;
        (s < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Sample the orbit at the requested abscissae (x >= 0, ascending). Once the
// orbit has decayed to tail_switch * amp it is continued as y(x_c) exp(-kappa (x - x_c)),
// which is the decaying solution of the linearization up to the (tiny) growing
// component still present at x_c.
std::vector<State> sample_orbit(const StationarySystem& sys, const Family& fam, double amp,
                                const std::vector<double>& xs) {
    const double m = sys.c.m;
    const double omega = sys.omega;
    const double kappa = decay_rate(m, omega);
    auto stepper = make_stepper();
    State y = start_state(fam, amp);
    double x = 0.0;
    double h = 1e-3 / (1.0 + std::abs(m));

    std::vector<State> out;
    out.reserve(xs.size());
    bool in_tail = false;
    double x_switch = 0.0;
    State tail_start{};

    for (const double target : xs) {
        while (!in_tail && x < target) {
            double step = std::min(h, target - x);
            const bool clamped = step < h;
            // try_step shrinks `step` on failure and proposes the next size on success
            if (stepper.try_step(sys, y, x, step) == odeint::fail) {
                h = step;
                continue;
            }
            if (!clamped) h = step;
            if (std::hypot(y[0], y[1]) < tail_switch * amp) {
                in_tail = true;
                x_switch = x;
                tail_start = y;
            }
        }
        if (!in_tail) {
            out.push_back(y);
        } else {
            const double decay = std::exp(-kappa * (target - x_switch));
            out.push_back({tail_start[0] * decay, tail_start[1] * decay});
        }
    }
    return out;
}

StationaryProfile build_profile(const StationarySystem& sys, const Family& fam, double amp,
                                const Grid& grid) {
    const std::size_t n = grid.size();
    std::vector<double> abs_x(n);
    for (std::size_t j = 0; j < n; ++j) abs_x[j] = std::abs(grid.x(j));
    std::vector<double> sorted = abs_x;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const auto orbit = sample_orbit(sys, fam, amp, sorted);
    std::map<double, State> table;
    for (std::size_t i = 0; i < sorted.size(); ++i) table.emplace(sorted[i], orbit[i]);

    StationaryProfile p{sys.omega, grid, std::vector<double>(n), std::vector<double>(n),
                        fam.parity, amp, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const State& y = table.at(abs_x[j]);
        const double sign = grid.x(j) < 0.0 ? -1.0 : 1.0;
        p.A[j] = fam.primary == 0 ? y[0] : sign * y[0];
        p.B[j] = fam.primary == 1 ? y[1] : sign * y[1];
    }

    std::vector<cplx> a(p.A.begin(), p.A.end());
    std::vector<cplx> b(p.B.begin(), p.B.end());
    const auto da = spectral_derivative(a, grid);
    const auto db = spectral_derivative(b, grid);
    double residual = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto [fa, fb] = stationary_odes(p.A[j], p.B[j], sys.c, sys.omega);
        residual = std::max({residual, std::abs(da[j].real() - fa), std::abs(db[j].real() - fb)});
    }
    p.residual = residual;
    return p;
}

}  // namespace

SpinorField StationaryProfile::to_field(double t) const {
    const cplx phase = std::polar(1.0, -omega * t);
    SpinorField f(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        f.plus()[j] = phase * A[j];
        f.minus()[j] = phase * B[j];
    }
    return f;
}

std::pair<double, double> stationary_odes(double A, double B, const CouplingConfig& c,
                                          double omega) {
    if (c.alpha_w != 0.0 || c.alpha_sw != 0.0)
        throw UnsupportedMode("stationary profiles require alpha_w = alpha_sw = 0");
    const double ap = c.alpha_plus();
    const double am = c.alpha_minus();
    const double dA = (-c.m - omega + am * A * A + ap * B * B) * B;
    const double dB = (omega - c.m - ap * A * A - am * B * B) * A;
    return {dA, dB};
}

double decay_rate(double m, double omega) {
    if (!(std::abs(omega) < std::abs(m)))
        throw NonLocalizable(fmt::format("|omega| = {} must be below m = {} for a decaying tail",
                                         std::abs(omega), m));
    return std::sqrt(m * m - omega * omega);
}

StationaryProfile shoot(const CouplingConfig& coupling, double omega, double tolerance,
                        const Grid& grid, const ShootOptions& options) {
    coupling.validate();
    if (coupling.alpha_w != 0.0 || coupling.alpha_sw != 0.0)
        throw UnsupportedMode("stationary profiles require alpha_w = alpha_sw = 0");
    if (!(coupling.m > 0.0)) throw InvalidParameter("stationary profiles require m > 0");
    const double kappa = decay_rate(coupling.m, omega);

    double alpha_scale = std::abs(coupling.alpha_plus());
    if (alpha_scale == 0.0) alpha_scale = std::abs(coupling.alpha_minus());
    const double a_max = options.a_max.value_or(
        alpha_scale > 0.0 ? 10.0 * std::sqrt(coupling.m / alpha_scale) : 10.0 * std::sqrt(coupling.m));
    const double x_end = options.x_max.value_or(25.0 / kappa);
    if (!(a_max > 0.0) || !(x_end > 0.0)) throw InvalidParameter("a_max and x_max must be positive");

    const StationarySystem sys{coupling, omega};
    for (const Family& fam : {upper_even, lower_even}) {
        const auto amp = bisect(sys, fam, a_max, x_end);
        if (!amp) continue;
        StationaryProfile p = build_profile(sys, fam, *amp, grid);
        if (!(p.residual <= tolerance))
            throw NoSolutionFound(fmt::format(
                "shooting converged to amplitude {} but grid residual {:.3g} exceeds tolerance {:.3g}",
                *amp, p.residual, tolerance));
        return p;
    }
    throw NoSolutionFound(fmt::format(
        "no sign change of the shooting functional on (0, {}] for omega = {} ({})", a_max, omega,
        describe(coupling)));
}

}  // namespace nld
