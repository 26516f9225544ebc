#pragma once

#include <string>
#include <string_view>

namespace nld {

/// Mass and the four dimensionless quartic couplings. The gamma matrices are
/// fixed to gamma0 = sigma3, gamma1 = i sigma1.
struct CouplingConfig {
    double m = 1.0;
    double alpha_s = 0.0;
    double alpha_v = 0.0;
    double alpha_w = 0.0;
    double alpha_sw = 0.0;

    double alpha_plus() const noexcept { return alpha_v + alpha_s; }
    double alpha_minus() const noexcept { return alpha_v - alpha_s; }

    bool is_linear() const noexcept {
        return alpha_s == 0.0 && alpha_v == 0.0 && alpha_w == 0.0 && alpha_sw == 0.0;
    }

    /// Throws InvalidParameter if any field is not finite.
    void validate() const;

    friend bool operator==(const CouplingConfig&, const CouplingConfig&) = default;
};

enum class Mode {
    GeneralQuartic,
    Thirring,
    GrossNeveu,
    SpinSymmetric,
    PseudoSpinSymmetric,
    PseudoScalar,
};

std::string_view mode_name(Mode mode) noexcept;
/// Accepts the names produced by mode_name(); throws InvalidParameter otherwise.
Mode parse_mode(std::string_view name);

/// A named coupling mode together with the parameter(s) it takes.
/// The single-parameter modes store their parameter in `alpha`:
///   Thirring -> alpha_v, GrossNeveu -> alpha_s, PseudoScalar -> alpha_w,
///   Spin/PseudoSpinSymmetric -> the combined alpha with alpha_s = +-alpha/2.
class ModePreset {
public:
    static ModePreset general(const CouplingConfig& coupling);
    static ModePreset thirring(double alpha_v, double m = 1.0);
    static ModePreset gross_neveu(double alpha_s, double m = 1.0);
    static ModePreset spin_symmetric(double alpha, double m = 1.0);
    static ModePreset pseudo_spin_symmetric(double alpha, double m = 1.0);
    static ModePreset pseudo_scalar(double alpha_w, double m = 1.0);

    Mode mode() const noexcept { return mode_; }
    double m() const noexcept { return general_.m; }
    double alpha() const noexcept { return alpha_; }
    /// Only meaningful for GeneralQuartic.
    const CouplingConfig& general_coupling() const noexcept { return general_; }

private:
    ModePreset(Mode mode, double alpha, CouplingConfig general)
        : mode_(mode), alpha_(alpha), general_(general) {}

    Mode mode_;
    double alpha_;
    CouplingConfig general_;
};

CouplingConfig preset_to_coupling(const ModePreset& preset);

std::string describe(const CouplingConfig& coupling);

}  // namespace nld
