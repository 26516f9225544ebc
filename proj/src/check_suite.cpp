#include "nld/check_suite.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "nld/conformal.hpp"
#include "nld/diagnostics.hpp"
#include "nld/dynamics.hpp"
#include "nld/integrators.hpp"
#include "nld/random_field.hpp"

namespace nld {

namespace {

CheckResult propagator_unitarity() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Grid grid(-10.0, 10.0, 64);
        for (const Mat2& a : linear_propagator(grid, u(rng), u(rng))) {
            // columns orthonormal
            const cplx c01 = std::conj(a.a00) * a.a01 + std::conj(a.a10) * a.a11;
            worst = std::max({worst, std::abs(std::norm(a.a00) + std::norm(a.a10) - 1.0),
                              std::abs(std::norm(a.a01) + std::norm(a.a11) - 1.0), std::abs(c01)});
        }
    }
    return {"linear propagator unitarity", worst <= 1e-14, fmt::format("max |U^H U - I| = {:.2e}", worst)};
}

CheckResult strang_charge() {
    const Grid grid(-40.0, 40.0, 512);
    const auto presets = {ModePreset::spin_symmetric(0.5), ModePreset::pseudo_scalar(0.7),
                          ModePreset::general({1.0, 0.3, 0.4, 0.2, 0.1})};
    double worst = 0.0;
    for (const auto& p : presets) {
        const CouplingConfig c = preset_to_coupling(p);
        Stepper stepper(grid, c);
        SpinorField psi = initial_state(grid, 1.0, -1.0, 1.0);
        const double q0 = charge(psi);
        for (int i = 0; i < 200; ++i) psi = stepper.strang(psi, 0.01);
        worst = std::max(worst, std::abs(charge(psi) - q0) / q0);
    }
    return {"Strang charge conservation (200 steps)", worst <= 1e-12,
            fmt::format("max relative drift = {:.2e}", worst)};
}

CheckResult mode_reductions() {
    const Grid grid(-20.0, 20.0, 256);
    const std::vector<ModePreset> presets{
        ModePreset::thirring(0.5),      ModePreset::gross_neveu(0.5),
        ModePreset::spin_symmetric(0.5), ModePreset::pseudo_spin_symmetric(0.5),
        ModePreset::pseudo_scalar(0.5)};
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SpinorField psi = random_smooth_field(grid, seed);
        for (const auto& p : presets) worst = std::max(worst, verify_mode_reduction(p, psi));
    }
    return {"mode reductions match the general equation", worst <= 1e-12,
            fmt::format("max difference = {:.2e}", worst)};
}

CheckResult bilinear_bounds() {
    const Grid grid(-20.0, 20.0, 256);
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SpinorField psi = random_smooth_field(grid, 100 + seed);
        for (const auto& b : bilinears(psi)) {
            worst = std::min({worst, b.V - std::abs(b.S), b.V * b.V - b.S * b.S - b.W * b.W});
        }
    }
    return {"bilinear bounds V >= |S|, V^2 - S^2 - W^2 >= 0", worst >= -1e-12,
            fmt::format("most negative slack = {:.2e}", worst)};
}

double observed_order(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

CheckResult rk4_order() {
    const Grid grid(-10.0, 10.0, 64);
    const double m = 1.0;
    const double k = grid.wavenumbers()[3];
    const double e = std::hypot(m, k);
    // positive-energy eigenvector of [[m, ik], [-ik, -m]]
    const cplx u_plus = m + e;
    const cplx u_minus(0.0, -k);
    const double norm = std::sqrt(std::norm(u_plus) + std::norm(u_minus));
    auto wave = [&](double t) {
        SpinorField f(grid);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const cplx phase = std::polar(1.0, k * grid.x(j) - e * t);
            f.plus()[j] = u_plus / norm * phase;
            f.minus()[j] = u_minus / norm * phase;
        }
        return f;
    };
    const CouplingConfig c{.m = m};
    std::vector<double> errors;
    for (double dt : {0.1, 0.05}) {
        Stepper stepper(grid, c);
        SpinorField psi = wave(0.0);
        const int steps = static_cast<int>(std::lround(1.0 / dt));
        for (int i = 0; i < steps; ++i) psi = stepper.rk4(psi, dt);
        errors.push_back(max_abs_difference(psi, wave(1.0)));
    }
    const double order = observed_order(errors[0], errors[1]);
    return {"RK4 convergence order (linear plane wave)", std::abs(order - 4.0) <= 0.2,
            fmt::format("observed order = {:.3f}", order)};
}

CheckResult strang_order() {
    const Grid grid(-20.0, 20.0, 256);
    const CouplingConfig c = preset_to_coupling(ModePreset::spin_symmetric(0.5));
    auto run = [&](double dt) {
        Stepper stepper(grid, c);
        SpinorField psi = initial_state(grid, 1.0, -1.0, 1.0);
        const int steps = static_cast<int>(std::lround(0.5 / dt));
        for (int i = 0; i < steps; ++i) psi = stepper.strang(psi, dt);
        return psi;
    };
    const SpinorField a = run(0.01);
    const SpinorField b = run(0.005);
    const SpinorField d = run(0.0025);
    const double order = observed_order(max_abs_difference(a, b), max_abs_difference(b, d));
    return {"Strang convergence order (self-refinement)", std::abs(order - 2.0) <= 0.1,
            fmt::format("observed order = {:.3f}", order)};
}

CheckResult conformal_identities() {
    bool ok = true;
    for (int n = 2; n <= 64; ++n) {
        const Rational ds = conformal_degree(FieldKind::Spinor, n);
        const auto ls = std::get<Rational>(nonlinearity_exponent(FieldKind::Spinor, n));
        ok = ok && (ls / Rational(2) + Rational(1)) * (Rational(2) * ds) == Rational(-n);
        ok = ok && ls == Rational(2, n - 1);
        const auto lsc = nonlinearity_exponent(FieldKind::Scalar, n);
        if (const auto* l = std::get_if<Rational>(&lsc))
            ok = ok && (*l + Rational(2)) * conformal_degree(FieldKind::Scalar, n) == Rational(-n);
        else
            ok = ok && n == 2;
    }
    return {"conformal degree identities, n = 2..64", ok, ok ? "exact" : "mismatch"};
}

CheckResult initial_charge() {
    const Grid grid(-40.0, 40.0, 1024);
    const double q = charge(initial_state(grid, 1.0, -1.0, 1.0));
    const double err = std::abs(q - 8.0 / 3.0);
    return {"initial-state charge = 8/3", err <= 1e-10, fmt::format("|Q - 8/3| = {:.2e}", err)};
}

}  // namespace

std::vector<CheckResult> run_check_suite() {
    return {propagator_unitarity(), strang_charge(),  mode_reductions(),      bilinear_bounds(),
            rk4_order(),            strang_order(),   conformal_identities(), initial_charge()};
}

}  // namespace nld
