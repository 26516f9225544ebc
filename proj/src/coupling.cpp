#include "nld/coupling.hpp"

#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "nld/errors.hpp"

namespace nld {

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 6> mode_names{{
    {Mode::GeneralQuartic, "general"},
    {Mode::Thirring, "thirring"},
    {Mode::GrossNeveu, "gross-neveu"},
    {Mode::SpinSymmetric, "spin"},
    {Mode::PseudoSpinSymmetric, "pseudo-spin"},
    {Mode::PseudoScalar, "pseudo-scalar"},
}};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw InvalidParameter(fmt::format("{} must be finite", what));
}

}  // namespace

void CouplingConfig::validate() const {
    require_finite(m, "m");
    require_finite(alpha_s, "alpha_s");
    require_finite(alpha_v, "alpha_v");
    require_finite(alpha_w, "alpha_w");
    require_finite(alpha_sw, "alpha_sw");
}

std::string_view mode_name(Mode mode) noexcept {
    for (const auto& [m, name] : mode_names)
        if (m == mode) return name;
    return "unknown";
}

Mode parse_mode(std::string_view name) {
    for (const auto& [m, n] : mode_names)
        if (n == name) return m;
    throw InvalidParameter(fmt::format("unknown coupling mode '{}'", name));
}

ModePreset ModePreset::general(const CouplingConfig& coupling) {
    coupling.validate();
    return {Mode::GeneralQuartic, 0.0, coupling};
}

ModePreset ModePreset::thirring(double alpha_v, double m) {
    require_finite(alpha_v, "alpha_v");
    require_finite(m, "m");
    return {Mode::Thirring, alpha_v, CouplingConfig{.m = m}};
}

ModePreset ModePreset::gross_neveu(double alpha_s, double m) {
    require_finite(alpha_s, "alpha_s");
    require_finite(m, "m");
    return {Mode::GrossNeveu, alpha_s, CouplingConfig{.m = m}};
}

ModePreset ModePreset::spin_symmetric(double alpha, double m) {
    require_finite(alpha, "alpha");
    require_finite(m, "m");
    return {Mode::SpinSymmetric, alpha, CouplingConfig{.m = m}};
}

ModePreset ModePreset::pseudo_spin_symmetric(double alpha, double m) {
    require_finite(alpha, "alpha");
    require_finite(m, "m");
    return {Mode::PseudoSpinSymmetric, alpha, CouplingConfig{.m = m}};
}

ModePreset ModePreset::pseudo_scalar(double alpha_w, double m) {
    require_finite(alpha_w, "alpha_w");
    require_finite(m, "m");
    return {Mode::PseudoScalar, alpha_w, CouplingConfig{.m = m}};
}

CouplingConfig preset_to_coupling(const ModePreset& preset) {
    CouplingConfig c{.m = preset.m()};
    const double a = preset.alpha();
    switch (preset.mode()) {
        case Mode::GeneralQuartic: return preset.general_coupling();
        case Mode::Thirring: c.alpha_v = a; break;
        case Mode::GrossNeveu: c.alpha_s = a; break;
        case Mode::SpinSymmetric:
            c.alpha_s = 0.5 * a;
            c.alpha_v = 0.5 * a;
            break;
        case Mode::PseudoSpinSymmetric:
            c.alpha_s = -0.5 * a;
            c.alpha_v = 0.5 * a;
            break;
        case Mode::PseudoScalar: c.alpha_w = a; break;
    }
    return c;
}

std::string describe(const CouplingConfig& c) {
    return fmt::format("m={} alpha_s={} alpha_v={} alpha_w={} alpha_sw={}", c.m, c.alpha_s,
                       c.alpha_v, c.alpha_w, c.alpha_sw);
}

}  // namespace nld
