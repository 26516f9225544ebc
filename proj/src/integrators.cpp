#include "nld/integrators.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nld/dynamics.hpp"
#include "nld/errors.hpp"

namespace nld {

namespace {

constexpr cplx I{0.0, 1.0};

// N = c0 * 1 + c3 * sigma3 + c1 * sigma1 at one grid point.
struct PointwiseHamiltonian {
    double c0, c3, c1;
};

PointwiseHamiltonian nonlinear_matrix(cplx p, cplx q, const CouplingConfig& c) {
    const auto [S, V, W] = bilinear_at(p, q);
    return {c.alpha_v * V, c.alpha_s * S - c.alpha_sw * W, c.alpha_w * W + c.alpha_sw * S};
}

// (p, q) <- exp(-i N tau) (p, q)
void apply_exponential(const PointwiseHamiltonian& h, double tau, cplx& p, cplx& q) {
    const double r = std::hypot(h.c3, h.c1);
    const double cs = std::cos(r * tau);
    const double sn = r > 0.0 ? std::sin(r * tau) / r : tau;
    const cplx phase = std::polar(1.0, -h.c0 * tau);
    const cplx np = (cs - I * (sn * h.c3)) * p - I * (sn * h.c1) * q;
    const cplx nq = -I * (sn * h.c1) * p + (cs + I * (sn * h.c3)) * q;
    p = phase * np;
    q = phase * nq;
}

bool bilinears_invariant(const CouplingConfig& c) {
    const bool diagonal = c.alpha_w == 0.0 && c.alpha_sw == 0.0;
    const bool sigma1_only = c.alpha_s == 0.0 && c.alpha_sw == 0.0;
    return diagonal || sigma1_only;
}

SpinorField combine(const SpinorField& base, double a, const SpinorField& k) {
    SpinorField out = base;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out.plus()[j] += a * k.plus()[j];
        out.minus()[j] += a * k.minus()[j];
    }
    return out;
}

}  // namespace

std::vector<Mat2> linear_propagator(const Grid& grid, double m, double dt) {
    const auto ks = grid.derivative_wavenumbers();
    std::vector<Mat2> out(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const double k = ks[j];
        const double e = std::hypot(m, k);
        const double cs = std::cos(e * dt);
        const double sn = e > 0.0 ? std::sin(e * dt) / e : dt;
        out[j] = {cplx(cs, -sn * m), cplx(sn * k, 0.0), cplx(-sn * k, 0.0), cplx(cs, sn * m)};
    }
    return out;
}

SpinorField nonlinear_substep(const SpinorField& field, const CouplingConfig& c, double dt) {
    SpinorField out = field;
    if (c.is_linear() || dt == 0.0) return out;
    auto up = out.plus();
    auto dn = out.minus();

    if (bilinears_invariant(c)) {
        for (std::size_t j = 0; j < out.size(); ++j)
            apply_exponential(nonlinear_matrix(up[j], dn[j], c), dt, up[j], dn[j]);
        return out;
    }

    // Midpoint freezing: psi_mid = exp(-i N(psi_mid) dt/2) psi, two iterations
    // from psi_mid = psi, then the full step with N frozen at psi_mid.
    for (std::size_t j = 0; j < out.size(); ++j) {
        const cplx p0 = up[j];
        const cplx q0 = dn[j];
        cplx pm = p0;
        cplx qm = q0;
        for (int it = 0; it < 2; ++it) {
            const auto h = nonlinear_matrix(pm, qm, c);
            pm = p0;
            qm = q0;
            apply_exponential(h, 0.5 * dt, pm, qm);
        }
        apply_exponential(nonlinear_matrix(pm, qm, c), dt, up[j], dn[j]);
    }
    return out;
}

SpinorField step_strang(const SpinorField& field, const CouplingConfig& coupling, double dt) {
    return Stepper(field.grid(), coupling).strang(field, dt);
}

SpinorField step_rk4(const SpinorField& field, const CouplingConfig& coupling, double dt) {
    return Stepper(field.grid(), coupling).rk4(field, dt);
}

std::string_view scheme_name(Scheme scheme) noexcept {
    return scheme == Scheme::RK4 ? "rk4" : "strang";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "rk4") return Scheme::RK4;
    if (name == "strang") return Scheme::Strang;
    throw InvalidParameter(fmt::format("unknown scheme '{}' (expected rk4 or strang)", name));
}

double rk4_step_bound(const SpinorField& field, const CouplingConfig& c, double safety) {
    double max_v = 0.0;
    for (const auto& b : bilinears(field)) max_v = std::max(max_v, b.V);
    const double alpha_sum =
        std::abs(c.alpha_s) + std::abs(c.alpha_v) + std::abs(c.alpha_w) + std::abs(c.alpha_sw);
    return safety / (field.grid().max_wavenumber() + std::abs(c.m) + alpha_sum * max_v);
}

Stepper::Stepper(Grid grid, CouplingConfig coupling)
    : grid_(std::move(grid)), coupling_(coupling) {
    coupling_.validate();
}

const std::vector<Mat2>& Stepper::propagator(double dt) {
    if (!have_cache_ || cached_dt_ != dt) {
        cache_ = linear_propagator(grid_, coupling_.m, dt);
        cached_dt_ = dt;
        have_cache_ = true;
    }
    return cache_;
}

SpinorField Stepper::step(const SpinorField& field, double dt, Scheme scheme) {
    return scheme == Scheme::RK4 ? rk4(field, dt) : strang(field, dt);
}

SpinorField Stepper::strang(const SpinorField& field, double dt) {
    if (!(field.grid() == grid_)) throw GridMismatch("field grid differs from stepper grid");
    SpinorField out = nonlinear_substep(field, coupling_, 0.5 * dt);

    const auto& fft = fft_for(grid_.size());
    const auto& u = propagator(dt);
    std::vector<cplx> hp(grid_.size());
    std::vector<cplx> hm(grid_.size());
    fft.forward(out.plus(), hp);
    fft.forward(out.minus(), hm);
    for (std::size_t j = 0; j < hp.size(); ++j) {
        const cplx a = hp[j];
        const cplx b = hm[j];
        hp[j] = u[j].a00 * a + u[j].a01 * b;
        hm[j] = u[j].a10 * a + u[j].a11 * b;
    }
    fft.inverse(hp, out.plus());
    fft.inverse(hm, out.minus());

    return nonlinear_substep(out, coupling_, 0.5 * dt);
}

SpinorField Stepper::rk4(const SpinorField& field, double dt) const {
    if (!(field.grid() == grid_)) throw GridMismatch("field grid differs from stepper grid");
    if (dt == 0.0) return field;
    const SpinorField k1 = rhs(field, coupling_);
    const SpinorField k2 = rhs(combine(field, 0.5 * dt, k1), coupling_);
    const SpinorField k3 = rhs(combine(field, 0.5 * dt, k2), coupling_);
    const SpinorField k4 = rhs(combine(field, dt, k3), coupling_);
    SpinorField out = field;
    const double w = dt / 6.0;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out.plus()[j] += w * (k1.plus()[j] + 2.0 * k2.plus()[j] + 2.0 * k3.plus()[j] + k4.plus()[j]);
        out.minus()[j] +=
            w * (k1.minus()[j] + 2.0 * k2.minus()[j] + 2.0 * k3.minus()[j] + k4.minus()[j]);
    }
    return out;
}

Trajectory evolve(const SpinorField& initial, const CouplingConfig& coupling, const EvolveSpec& spec) {
    if (!(spec.dt > 0.0) || !std::isfinite(spec.dt)) throw InvalidParameter("dt must be positive");
    if (!(spec.t_final >= 0.0) || !std::isfinite(spec.t_final))
        throw InvalidParameter("t_final must be non-negative");
    if (spec.diagnostics_every == 0) throw InvalidParameter("diagnostics_every must be positive");
    for (std::size_t i = 0; i < spec.snapshot_times.size(); ++i) {
        const double ts = spec.snapshot_times[i];
        if (!(ts >= 0.0 && ts <= spec.t_final))
            throw InvalidParameter(fmt::format("snapshot time {} outside [0, t_final]", ts));
        if (i > 0 && !(ts > spec.snapshot_times[i - 1]))
            throw InvalidParameter("snapshot times must be strictly increasing");
    }
    if (!initial.all_finite()) throw NumericalFailure("initial field is not finite", 0.0);

    Trajectory traj;
    Stepper stepper(initial.grid(), coupling);
    const double time_eps = 1e-12 * std::max(1.0, spec.t_final);

    auto check_cfl = [&](const SpinorField& f, double t) {
        if (spec.scheme != Scheme::RK4 || !traj.warnings.empty()) return;
        const double bound = rk4_step_bound(f, coupling, spec.cfl_safety);
        if (spec.dt > bound)
            traj.warnings.push_back(
                fmt::format("t={}: dt={} exceeds RK4 stability bound {:.6g}", t, spec.dt, bound));
    };

    std::vector<double> targets = spec.snapshot_times;
    if (targets.empty() || targets.back() < spec.t_final) targets.push_back(spec.t_final);

    SpinorField field = initial;
    double t = 0.0;
    std::size_t next_snapshot = 0;
    auto at_target = [&](double target) {
        traj.diagnostics.push_back(measure(target, field, coupling));
        if (next_snapshot < spec.snapshot_times.size() &&
            spec.snapshot_times[next_snapshot] == target) {
            traj.snapshots.push_back({target, field});
            ++next_snapshot;
        }
    };

    check_cfl(field, 0.0);
    bool recorded_zero = false;
    for (const double target : targets) {
        if (target <= time_eps) {
            if (!recorded_zero) at_target(target);
            recorded_zero = true;
            continue;
        }
        if (!recorded_zero) {
            traj.diagnostics.push_back(measure(0.0, field, coupling));
            recorded_zero = true;
        }
        const double segment_start = t;
        std::size_t i = 0;
        while (true) {
            const double now = segment_start + static_cast<double>(i) * spec.dt;
            const double remaining = target - now;
            if (remaining <= time_eps) break;
            const double h = std::min(spec.dt, remaining);
            SpinorField next = stepper.step(field, h, spec.scheme);
            if (!next.all_finite())
                throw NumericalFailure(
                    fmt::format("non-finite field after step from t={}", now), now);
            field = std::move(next);
            ++i;
            ++traj.steps;
            t = (h < spec.dt) ? target : segment_start + static_cast<double>(i) * spec.dt;
            if (traj.steps % spec.diagnostics_every == 0 && target - t > time_eps) {
                traj.diagnostics.push_back(measure(t, field, coupling));
                check_cfl(field, t);
            }
        }
        t = target;
        at_target(target);
    }
    return traj;
}

}  // namespace nld
