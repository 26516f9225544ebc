#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "nld/dynamics.hpp"
#include "nld/errors.hpp"
#include "nld/integrators.hpp"
#include "nld/random_field.hpp"

using namespace nld;

namespace {

SpinorField constant_field(const Grid& g, cplx p, cplx q) {
    return SpinorField(g, std::vector<cplx>(g.size(), p), std::vector<cplx>(g.size(), q));
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("preset zero patterns") {
    auto c = preset_to_coupling(ModePreset::thirring(0.5));
    CHECK(c == CouplingConfig{1.0, 0.0, 0.5, 0.0, 0.0});
    c = preset_to_coupling(ModePreset::spin_symmetric(0.5));
    CHECK(c == CouplingConfig{1.0, 0.25, 0.25, 0.0, 0.0});
    c = preset_to_coupling(ModePreset::pseudo_spin_symmetric(0.5));
    CHECK(c == CouplingConfig{1.0, -0.25, 0.25, 0.0, 0.0});
    c = preset_to_coupling(ModePreset::gross_neveu(0.7, 2.0));
    CHECK(c == CouplingConfig{2.0, 0.7, 0.0, 0.0, 0.0});
    c = preset_to_coupling(ModePreset::pseudo_scalar(-0.3));
    CHECK(c == CouplingConfig{1.0, 0.0, 0.0, -0.3, 0.0});
    const CouplingConfig g{1.5, 0.1, 0.2, 0.3, 0.4};
    CHECK(preset_to_coupling(ModePreset::general(g)) == g);
    CHECK(g.alpha_plus() == doctest::Approx(0.3));
    CHECK(g.alpha_minus() == doctest::Approx(0.1));
    CHECK_THROWS_AS(ModePreset::thirring(NAN), InvalidParameter);
    CHECK_THROWS_AS((CouplingConfig{1.0, INFINITY, 0, 0, 0}.validate()), InvalidParameter);
}

TEST_CASE("mode names round trip") {
    for (Mode m : {Mode::GeneralQuartic, Mode::Thirring, Mode::GrossNeveu, Mode::SpinSymmetric,
                   Mode::PseudoSpinSymmetric, Mode::PseudoScalar})
        CHECK(parse_mode(mode_name(m)) == m);
    CHECK_THROWS_AS(parse_mode("soler"), InvalidParameter);
}

TEST_CASE("free plane wave on the positive-energy branch") {
    const Grid g(-10.0, 10.0, 64);
    const double m = 1.3;
    for (std::size_t idx : {0u, 1u, 4u, 60u}) {
        const double k = g.wavenumbers()[idx];
        Eigen::Matrix2cd h;
        h << m, cplx(0, k), cplx(0, -k), -m;
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
        const double e = es.eigenvalues()(1);
        const Eigen::Vector2cd u = es.eigenvectors().col(1);
        CHECK(e == doctest::Approx(std::hypot(k, m)));

        SpinorField psi(g);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const cplx phase = std::polar(1.0, k * g.x(j));
            psi.plus()[j] = u(0) * phase;
            psi.minus()[j] = u(1) * phase;
        }
        const auto d = rhs(psi, CouplingConfig{.m = m});
        SpinorField expected = psi;
        expected *= cplx(0.0, -e);
        CHECK(max_abs_difference(d, expected) < 1e-12);
    }
}

TEST_CASE("Thirring on a constant upper component") {
    const Grid g(-5.0, 5.0, 32);
    const cplx c(0.6, -0.8);
    const auto coupling = preset_to_coupling(ModePreset::thirring(0.5));
    const auto d = rhs(constant_field(g, c, 0.0), coupling);
    const cplx expected = cplx(0, -1) * (1.0 + 0.5 * std::norm(c)) * c;
    for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(std::abs(d.plus()[j] - expected) < 1e-14);
        CHECK(std::abs(d.minus()[j]) < 1e-14);
    }
}

TEST_CASE("spin-symmetric with vanishing lower component") {
    const Grid g(-20.0, 20.0, 256);
    SpinorField psi(g);
    for (std::size_t j = 0; j < g.size(); ++j) psi.plus()[j] = std::polar(1.0 / std::cosh(g.x(j)), 0.3 * g.x(j));
    const double alpha = 0.5;
    const auto d = rhs(psi, preset_to_coupling(ModePreset::spin_symmetric(alpha)));
    const auto dp = spectral_derivative(psi.plus(), g);
    for (std::size_t j = 0; j < g.size(); ++j) {
        const cplx p = psi.plus()[j];
        CHECK(std::abs(d.plus()[j] - cplx(0, -1) * (1.0 + alpha * std::norm(p)) * p) < 1e-13);
        CHECK(std::abs(d.minus()[j] - cplx(0, -1) * (-dp[j])) < 1e-13);
    }
}

TEST_CASE("mode reductions agree with the general equation") {
    const Grid g(-20.0, 20.0, 256);
    const std::vector<ModePreset> presets{
        ModePreset::thirring(0.5),      ModePreset::gross_neveu(-0.4),
        ModePreset::spin_symmetric(0.5), ModePreset::pseudo_spin_symmetric(0.5),
        ModePreset::pseudo_scalar(0.5), ModePreset::general({1.0, 0.2, -0.3, 0.4, 0.0})};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto psi = random_smooth_field(g, seed);
        for (const auto& p : presets) CHECK(verify_mode_reduction(p, psi) <= 1e-12);
    }
    CHECK_THROWS_AS(rhs_reduced(ModePreset::general({1.0, 0.0, 0.0, 0.0, 0.1}), random_smooth_field(g, 1)),
                    UnsupportedMode);
}

TEST_CASE("mode reduction detects a wrong coupling") {
    // Feeding the reduced path a different mode than the general path must show up.
    const Grid g(-20.0, 20.0, 256);
    const auto psi = random_smooth_field(g, 3);
    const auto general = rhs(psi, preset_to_coupling(ModePreset::spin_symmetric(0.5)));
    const auto reduced = rhs_reduced(ModePreset::pseudo_spin_symmetric(0.5), psi);
    CHECK(max_abs_difference(general, reduced) > 1e-3);
}

TEST_CASE("global phase covariance") {
    const Grid g(-20.0, 20.0, 128);
    const CouplingConfig c{1.0, 0.3, -0.2, 0.5, 0.25};
    const auto psi = random_smooth_field(g, 11);
    for (double theta : {0.3, 1.7, -2.9}) {
        SpinorField rotated = psi;
        rotated *= std::polar(1.0, theta);
        SpinorField expected = rhs(psi, c);
        expected *= std::polar(1.0, theta);
        CHECK(max_abs_difference(rhs(rotated, c), expected) < 1e-12);
    }
}

TEST_CASE("Hamiltonian is Hermitian: charge flux vanishes") {
    const Grid g(-20.0, 20.0, 256);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const CouplingConfig c{1.0 + u(rng), u(rng), u(rng), u(rng), u(rng)};
        const auto psi = random_smooth_field(g, 40 + trial);
        const auto d = rhs(psi, c);
        double flux = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            flux += (std::conj(psi.plus()[j]) * d.plus()[j] + std::conj(psi.minus()[j]) * d.minus()[j]).real();
            scale += std::abs(psi.plus()[j]) * std::abs(d.plus()[j]) + std::abs(psi.minus()[j]) * std::abs(d.minus()[j]);
        }
        CHECK(std::abs(flux) <= 1e-13 * scale);
    }
}

TEST_CASE("linear rhs equals the derivative of the exact propagator") {
    const Grid g(-10.0, 10.0, 64);
    const double m = 0.7;
    const auto psi = random_band_limited_field(g, 9, 10);
    // Central difference of U(h) psi in h; U is analytic so O(h^2) with tiny constant.
    const double h = 1e-5;
    auto propagate = [&](double dt) {
        return step_strang(psi, CouplingConfig{.m = m}, dt);
    };
    const auto plus = propagate(h);
    const auto minus = propagate(-h);
    SpinorField fd(g);
    for (std::size_t j = 0; j < g.size(); ++j) {
        fd.plus()[j] = (plus.plus()[j] - minus.plus()[j]) / (2 * h);
        fd.minus()[j] = (plus.minus()[j] - minus.minus()[j]) / (2 * h);
    }
    CHECK(max_abs_difference(fd, rhs(psi, CouplingConfig{.m = m})) < 1e-6);
}

TEST_CASE("no coupling multiplies the derivative") {
    // d/dx enters only through the fixed off-diagonal entries, so the
    // derivative contribution is independent of every alpha.
    const Grid g(-10.0, 10.0, 64);
    const auto psi = random_smooth_field(g, 21);
    const CouplingConfig a{1.0, 0.3, 0.4, 0.5, 0.6};
    const CouplingConfig b{1.0, -0.9, 0.1, 0.0, 2.0};
    const auto ra = rhs(psi, a);
    const auto rb = rhs(psi, b);
    // Constant-in-x part of the difference comes only from the potentials.
    for (std::size_t j = 0; j < g.size(); ++j) {
        const auto [S, V, W] = bilinear_at(psi.plus()[j], psi.minus()[j]);
        const double dh11 = (a.alpha_s - b.alpha_s) * S - (a.alpha_sw - b.alpha_sw) * W + (a.alpha_v - b.alpha_v) * V;
        const double doff = (a.alpha_w - b.alpha_w) * W + (a.alpha_sw - b.alpha_sw) * S;
        const cplx expected = cplx(0, -1) * (dh11 * psi.plus()[j] + doff * psi.minus()[j]);
        CHECK(std::abs((ra.plus()[j] - rb.plus()[j]) - expected) < 1e-13);
    }
}

}
