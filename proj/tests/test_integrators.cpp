#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <random>

#include "nld/diagnostics.hpp"
#include "nld/errors.hpp"
#include "nld/integrators.hpp"
#include "nld/random_field.hpp"

using namespace nld;

namespace {

const Grid reference_grid(-40.0, 40.0, 1024);

SpinorField point_field(cplx p, cplx q) {
    const Grid g(0.0, 1.0, 8);
    return SpinorField(g, std::vector<cplx>(8, p), std::vector<cplx>(8, q));
}

// Positive-energy plane wave of the free equation at time t.
SpinorField free_wave(const Grid& g, std::size_t index, double m, double t) {
    const double k = g.derivative_wavenumbers()[index];
    const double e = std::hypot(m, k);
    const cplx up = m + e;
    const cplx dn(0.0, -k);
    const double n = std::sqrt(std::norm(up) + std::norm(dn));
    SpinorField f(g);
    for (std::size_t j = 0; j < g.size(); ++j) {
        const cplx phase = std::polar(1.0, k * g.x(j) - e * t);
        f.plus()[j] = up / n * phase;
        f.minus()[j] = dn / n * phase;
    }
    return f;
}

SpinorField run(Stepper& s, SpinorField psi, double dt, double t_end, Scheme scheme) {
    const int steps = static_cast<int>(std::lround(t_end / dt));
    for (int i = 0; i < steps; ++i) psi = s.step(psi, dt, scheme);
    return psi;
}

}  // namespace

TEST_SUITE("integrators") {

TEST_CASE("linear propagator special cases") {
    const Grid g(-10.0, 10.0, 32);
    const double m = 1.0;
    const double dt = 0.37;
    const auto u = linear_propagator(g, m, dt);
    CHECK(std::abs(u[0].a00 - std::polar(1.0, -m * dt)) < 1e-15);
    CHECK(std::abs(u[0].a11 - std::polar(1.0, m * dt)) < 1e-15);
    CHECK(std::abs(u[0].a01) == 0.0);
    CHECK(std::abs(u[0].a10) == 0.0);

    const auto id = linear_propagator(g, 0.0, dt);
    CHECK(id[0].a00 == cplx(1.0));
    CHECK(id[0].a11 == cplx(1.0));
    CHECK(id[0].a01 == cplx(0.0));
}

TEST_CASE("linear propagator is unitary and equals the matrix exponential") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double m = u(rng);
        const double dt = u(rng);
        const Grid g(-3.0, 3.0, 16);
        const auto us = linear_propagator(g, m, dt);
        for (std::size_t j = 0; j < g.size(); ++j) {
            Eigen::Matrix2cd U;
            U << us[j].a00, us[j].a01, us[j].a10, us[j].a11;
            CHECK((U.adjoint() * U - Eigen::Matrix2cd::Identity()).norm() <= 1e-14);

            const double k = g.derivative_wavenumbers()[j];
            Eigen::Matrix2cd h;
            h << m, cplx(0, k), cplx(0, -k), -m;
            const Eigen::Matrix2cd ref = (cplx(0, -dt) * h).exp();
            CHECK((U - ref).norm() <= 1e-12);
        }
    }
}

TEST_CASE("nonlinear substep: Thirring phase") {
    const auto c = preset_to_coupling(ModePreset::thirring(0.5));
    const auto out = nonlinear_substep(point_field(1.0, 0.0), c, 0.1);
    CHECK(std::abs(out.plus()[0] - std::polar(1.0, -0.05)) < 1e-15);
    CHECK(std::abs(out.minus()[0]) == 0.0);
}

TEST_CASE("nonlinear substep: pseudo-scalar keeps V and W") {
    const auto c = preset_to_coupling(ModePreset::pseudo_scalar(0.5));
    const auto in = point_field(1.0, 1.0);
    for (double dt : {0.1, 1.3, 7.0}) {
        const auto out = nonlinear_substep(in, c, dt);
        const auto b = bilinear_at(out.plus()[0], out.minus()[0]);
        CHECK(b.V == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(b.W == doctest::Approx(-2.0).epsilon(1e-15));
    }
}

TEST_CASE("nonlinear substep with dt = 0 is the identity") {
    const Grid g(-10.0, 10.0, 64);
    const auto psi = random_smooth_field(g, 4);
    for (const CouplingConfig& c :
         {CouplingConfig{1, 0.5, 0, 0, 0}, CouplingConfig{1, 0, 0.2, 0.5, 0}, CouplingConfig{1, 0.3, 0.2, 0.5, 0.4}})
        CHECK(max_abs_difference(nonlinear_substep(psi, c, 0.0), psi) == 0.0);
}

TEST_CASE("pure modes conserve their invariant pointwise") {
    const Grid g(-10.0, 10.0, 64);
    const auto psi = random_smooth_field(g, 8, 3, 1.5);
    const auto before = bilinears(psi);
    auto check_mode = [&](const ModePreset& p, auto invariant) {
        const auto out = nonlinear_substep(psi, preset_to_coupling(p), 0.83);
        const auto after = bilinears(out);
        for (std::size_t j = 0; j < g.size(); ++j) {
            CHECK(std::abs(invariant(after[j], out, j) - invariant(before[j], psi, j)) < 1e-13);
        }
    };
    auto V = [](const BilinearSample& b, const SpinorField&, std::size_t) { return b.V; };
    auto S = [](const BilinearSample& b, const SpinorField&, std::size_t) { return b.S; };
    auto W = [](const BilinearSample& b, const SpinorField&, std::size_t) { return b.W; };
    auto up = [](const BilinearSample&, const SpinorField& f, std::size_t j) { return std::norm(f.plus()[j]); };
    auto dn = [](const BilinearSample&, const SpinorField& f, std::size_t j) { return std::norm(f.minus()[j]); };
    check_mode(ModePreset::thirring(0.9), V);
    check_mode(ModePreset::gross_neveu(0.9), S);
    check_mode(ModePreset::spin_symmetric(0.9), up);
    check_mode(ModePreset::spin_symmetric(0.9), dn);
    check_mode(ModePreset::pseudo_spin_symmetric(0.9), up);
    check_mode(ModePreset::pseudo_scalar(0.9), W);
    check_mode(ModePreset::pseudo_scalar(0.9), V);
}

TEST_CASE("mixed-coupling substep is second order and unitary") {
    const Grid g(-10.0, 10.0, 32);
    const CouplingConfig c{1.0, 0.4, 0.3, 0.6, 0.5};
    const auto psi = random_smooth_field(g, 13, 2, 1.2);
    // Reference: many tiny substeps of the same (consistent) scheme.
    auto reference = [&](double t) {
        SpinorField f = psi;
        for (int i = 0; i < 4096; ++i) f = nonlinear_substep(f, c, t / 4096);
        return f;
    };
    const double t = 0.4;
    const auto ref = reference(t);
    auto err = [&](int n) {
        SpinorField f = psi;
        for (int i = 0; i < n; ++i) f = nonlinear_substep(f, c, t / n);
        return max_abs_difference(f, ref);
    };
    const double order = std::log2(err(8) / err(16));
    CHECK(order == doctest::Approx(2.0).epsilon(0.1));
    const auto one = nonlinear_substep(psi, c, 0.3);
    const auto b0 = bilinears(psi);
    const auto b1 = bilinears(one);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(b1[j].V == doctest::Approx(b0[j].V).epsilon(1e-14));
}

TEST_CASE("Strang with no coupling is exact for plane waves") {
    const Grid g(-10.0, 10.0, 64);
    const double m = 1.0;
    Stepper s(g, CouplingConfig{.m = m});
    SpinorField psi = free_wave(g, 3, m, 0.0);
    for (int i = 0; i < 10; ++i) {
        psi = s.strang(psi, 0.1);
        CHECK(max_abs_difference(psi, free_wave(g, 3, m, 0.1 * (i + 1))) <= 1e-12);
    }
}

TEST_CASE("Strang conserves charge over 6000 steps") {
    const auto c = preset_to_coupling(ModePreset::spin_symmetric(0.5));
    Stepper s(reference_grid, c);
    SpinorField psi = initial_state(reference_grid, 1.0, -1.0, 1.0);
    const double q0 = charge(psi);
    for (int i = 0; i < 6000; ++i) psi = s.strang(psi, 1e-3);
    CHECK(std::abs(charge(psi) - q0) / q0 <= 1e-12);
}

TEST_CASE("Strang conserves charge for every preset") {
    const Grid g(-20.0, 20.0, 256);
    for (const auto& p : {ModePreset::thirring(0.8), ModePreset::gross_neveu(0.8),
                          ModePreset::pseudo_spin_symmetric(0.8), ModePreset::pseudo_scalar(0.8),
                          ModePreset::general({1.0, 0.3, 0.2, 0.5, 0.4})}) {
        Stepper s(g, preset_to_coupling(p));
        SpinorField psi = random_smooth_field(g, 77);
        const double q0 = charge(psi);
        for (int i = 0; i < 200; ++i) psi = s.strang(psi, 5e-3);
        CHECK(std::abs(charge(psi) - q0) / q0 <= 1e-12);
    }
}

TEST_CASE("Strang is time-reversible for exact substeps") {
    const Grid g(-20.0, 20.0, 256);
    for (const auto& p : {ModePreset::spin_symmetric(0.5), ModePreset::pseudo_scalar(0.5),
                          ModePreset::thirring(-0.4)}) {
        const auto psi = random_smooth_field(g, 31);
        const auto c = preset_to_coupling(p);
        const auto there = step_strang(psi, c, 0.01);
        const auto back = step_strang(there, c, -0.01);
        CHECK(max_abs_difference(back, psi) <= 1e-12);
    }
}

TEST_CASE("RK4 round trip error is O(dt^5)") {
    const Grid g(-20.0, 20.0, 256);
    const auto c = preset_to_coupling(ModePreset::spin_symmetric(0.5));
    const auto psi = initial_state(g, 1.0, -1.0, 1.0);
    auto roundtrip = [&](double dt) {
        return max_abs_difference(step_rk4(step_rk4(psi, c, dt), c, -dt), psi);
    };
    const double e1 = roundtrip(0.02);
    const double e2 = roundtrip(0.01);
    CHECK(e1 < 1e-6);
    CHECK(std::log2(e1 / e2) > 4.5);
}

TEST_CASE("global phase equivariance of both schemes") {
    const Grid g(-20.0, 20.0, 256);
    const CouplingConfig c{1.0, 0.3, 0.2, 0.5, 0.4};
    const auto psi = random_smooth_field(g, 3);
    const cplx phase = std::polar(1.0, 0.77);
    for (Scheme scheme : {Scheme::RK4, Scheme::Strang}) {
        Stepper s(g, c);
        SpinorField rotated = psi;
        rotated *= phase;
        SpinorField a = run(s, psi, 0.01, 0.2, scheme);
        a *= phase;
        const SpinorField b = run(s, rotated, 0.01, 0.2, scheme);
        CHECK(max_abs_difference(a, b) <= 1e-13);
    }
}

TEST_CASE("RK4 with dt = 0 is the identity") {
    const auto psi = random_smooth_field(reference_grid, 2);
    CHECK(max_abs_difference(step_rk4(psi, CouplingConfig{1, 0.3, 0, 0, 0}, 0.0), psi) == 0.0);
}

TEST_CASE("RK4 is fourth order against the exact free propagator") {
    const Grid g(-10.0, 10.0, 64);
    const double m = 1.0;
    Stepper s(g, CouplingConfig{.m = m});
    const auto psi0 = free_wave(g, 5, m, 0.0);
    const auto exact = free_wave(g, 5, m, 1.0);
    std::vector<double> errors;
    for (double dt : {0.1, 0.05, 0.025})
        errors.push_back(max_abs_difference(run(s, psi0, dt, 1.0, Scheme::RK4), exact));
    CHECK(std::log2(errors[0] / errors[1]) == doctest::Approx(4.0).epsilon(0.05));
    CHECK(std::log2(errors[1] / errors[2]) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("evolve with t_final = 0 returns only the initial field") {
    const auto psi = initial_state(reference_grid, 1.0, -1.0, 1.0);
    EvolveSpec spec;
    spec.t_final = 0.0;
    spec.snapshot_times = {0.0};
    const auto traj = evolve(psi, CouplingConfig{}, spec);
    REQUIRE(traj.snapshots.size() == 1);
    CHECK(traj.snapshots[0].t == 0.0);
    CHECK(max_abs_difference(traj.snapshots[0].field, psi) == 0.0);
    CHECK(traj.steps == 0);
}

TEST_CASE("evolve lands exactly on snapshot times") {
    const Grid g(-20.0, 20.0, 128);
    const auto psi = initial_state(g, 1.0, -1.0, 1.0);
    EvolveSpec spec;
    spec.dt = 0.03;
    spec.t_final = 0.5;
    spec.snapshot_times = {0.0, 0.1, 0.25, 0.5};
    spec.scheme = Scheme::Strang;
    spec.diagnostics_every = 3;
    const auto c = preset_to_coupling(ModePreset::spin_symmetric(0.5));
    const auto traj = evolve(psi, c, spec);
    REQUIRE(traj.snapshots.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(traj.snapshots[i].t == spec.snapshot_times[i]);
    // 0.1 = 3*0.03 + 0.01, 0.25 - 0.1 = 5*0.03, 0.5 - 0.25 = 8*0.03 + 0.01
    CHECK(traj.steps == 4 + 5 + 9);

    // Manual stepping with the same landing rule reproduces the snapshot exactly.
    Stepper s(g, c);
    SpinorField manual = psi;
    for (int i = 0; i < 3; ++i) manual = s.strang(manual, 0.03);
    manual = s.strang(manual, 0.1 - 0.09);
    CHECK(max_abs_difference(manual, traj.snapshots[1].field) < 1e-15);

    for (std::size_t i = 1; i < traj.diagnostics.size(); ++i)
        CHECK(traj.diagnostics[i].t > traj.diagnostics[i - 1].t);
    for (const auto& snap : traj.snapshots) {
        const bool sampled = std::any_of(traj.diagnostics.begin(), traj.diagnostics.end(),
                                         [&](const auto& d) { return d.t == snap.t; });
        CHECK(sampled);
    }
}

TEST_CASE("evolve is deterministic") {
    const Grid g(-20.0, 20.0, 128);
    const auto psi = initial_state(g, 1.0, -1.0, 1.0);
    EvolveSpec spec;
    spec.t_final = 0.3;
    spec.snapshot_times = {0.3};
    const auto c = preset_to_coupling(ModePreset::pseudo_spin_symmetric(0.5));
    const auto a = evolve(psi, c, spec);
    const auto b = evolve(psi, c, spec);
    CHECK(max_abs_difference(a.snapshots[0].field, b.snapshots[0].field) == 0.0);
}

TEST_CASE("evolve rejects bad specs") {
    const auto psi = initial_state(reference_grid, 1.0, -1.0, 1.0);
    EvolveSpec spec;
    spec.dt = 0.0;
    CHECK_THROWS_AS(evolve(psi, CouplingConfig{}, spec), InvalidParameter);
    spec = EvolveSpec{};
    spec.snapshot_times = {0.0, 7.0};
    CHECK_THROWS_AS(evolve(psi, CouplingConfig{}, spec), InvalidParameter);
    spec.snapshot_times = {1.0, 0.5};
    CHECK_THROWS_AS(evolve(psi, CouplingConfig{}, spec), InvalidParameter);
}

TEST_CASE("evolve aborts on blow-up with the last good time") {
    // RK4 far above its stability bound amplifies the highest modes until overflow.
    const Grid g(-40.0, 40.0, 1024);
    const auto psi = initial_state(g, 1.0, -1.0, 1.0);
    EvolveSpec spec;
    spec.dt = 0.2;
    spec.t_final = 400.0;
    spec.snapshot_times = {};
    try {
        evolve(psi, preset_to_coupling(ModePreset::spin_symmetric(0.5)), spec);
        FAIL("expected NumericalFailure");
    } catch (const NumericalFailure& e) {
        CHECK(e.last_good_time() > 0.0);
        CHECK(e.last_good_time() < 400.0);
    }
}

TEST_CASE("RK4 step above the stability bound is recorded as a warning") {
    const auto psi = initial_state(reference_grid, 1.0, -1.0, 1.0);
    const auto c = preset_to_coupling(ModePreset::spin_symmetric(0.5));
    const double bound = rk4_step_bound(psi, c);
    CHECK(bound == doctest::Approx(0.5 / (reference_grid.max_wavenumber() + 1.0 + 0.5 * 1.0)));
    EvolveSpec spec;
    spec.dt = 0.02;
    spec.t_final = 0.04;
    spec.snapshot_times = {};
    CHECK(evolve(psi, c, spec).warnings.size() == 1);
    spec.dt = 1e-3;
    CHECK(evolve(psi, c, spec).warnings.empty());
}

}
