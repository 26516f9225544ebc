#include "nld/dynamics.hpp"

#include <complex>
#include <vector>

#include "nld/errors.hpp"

namespace nld {

namespace {

constexpr cplx minus_i{0.0, -1.0};

}  // namespace

SpinorField rhs(const SpinorField& field, const CouplingConfig& c) {
    const Grid& grid = field.grid();
    const auto dplus = spectral_derivative(field.plus(), grid);
    const auto dminus = spectral_derivative(field.minus(), grid);

    SpinorField out(grid);
    auto up = field.plus();
    auto dn = field.minus();
    auto out_up = out.plus();
    auto out_dn = out.minus();
    for (std::size_t j = 0; j < field.size(); ++j) {
        const auto [S, V, W] = bilinear_at(up[j], dn[j]);
        const double h11 = c.m + c.alpha_s * S - c.alpha_sw * W + c.alpha_v * V;
        const double h22 = -c.m - c.alpha_s * S + c.alpha_sw * W + c.alpha_v * V;
        const double off = c.alpha_w * W + c.alpha_sw * S;
        out_up[j] = minus_i * (h11 * up[j] + dminus[j] + off * dn[j]);
        out_dn[j] = minus_i * (-dplus[j] + off * up[j] + h22 * dn[j]);
    }
    return out;
}

SpinorField rhs_reduced(const ModePreset& preset, const SpinorField& field) {
    const Grid& grid = field.grid();
    const double m = preset.m();
    const double a = preset.alpha();
    const auto dplus = spectral_derivative(field.plus(), grid);
    const auto dminus = spectral_derivative(field.minus(), grid);
    const CouplingConfig& g = preset.general_coupling();
    if (preset.mode() == Mode::GeneralQuartic && g.alpha_sw != 0.0)
        throw UnsupportedMode("no component-wise reduction exists for alpha_sw != 0");

    SpinorField out(grid);
    for (std::size_t j = 0; j < field.size(); ++j) {
        const cplx p = field.plus()[j];
        const cplx q = field.minus()[j];
        const double pp = std::norm(p);
        const double qq = std::norm(q);
        // i dt psi+ = top, i dt psi- = bottom
        cplx top = m * p + dminus[j];
        cplx bottom = -m * q - dplus[j];
        switch (preset.mode()) {
            case Mode::Thirring:
                top += a * (pp + qq) * p;
                bottom += a * (pp + qq) * q;
                break;
            case Mode::GrossNeveu:
                top += a * (pp - qq) * p;
                bottom += a * (qq - pp) * q;
                break;
            case Mode::SpinSymmetric:
                top += a * pp * p;
                bottom += a * qq * q;
                break;
            case Mode::PseudoSpinSymmetric:
                top += a * qq * p;
                bottom += a * pp * q;
                break;
            case Mode::PseudoScalar: {
                const cplx cross = p * std::conj(q) + std::conj(p) * q;
                top -= a * cross * q;
                bottom -= a * cross * p;
                break;
            }
            case Mode::GeneralQuartic: {
                const double ap = g.alpha_plus();
                const double am = g.alpha_minus();
                const cplx cross = p * std::conj(q) + std::conj(p) * q;
                top += (ap * pp + am * qq) * p - g.alpha_w * cross * q;
                bottom += (am * pp + ap * qq) * q - g.alpha_w * cross * p;
                break;
            }
        }
        out.plus()[j] = minus_i * top;
        out.minus()[j] = minus_i * bottom;
    }
    return out;
}

double verify_mode_reduction(const ModePreset& preset, const SpinorField& field) {
    return max_abs_difference(rhs(field, preset_to_coupling(preset)), rhs_reduced(preset, field));
}

}  // namespace nld
