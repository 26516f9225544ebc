#pragma once

#include "nld/coupling.hpp"
#include "nld/spinor_field.hpp"

namespace nld {

/// Time derivative d(psi)/dt = -i H[psi] psi of the general quartic equation,
///
///   H = [ m + aS S - aSW W + aV V      d/dx + aW W + aSW S     ]
///       [ -d/dx + aW W + aSW S         -m - aS S + aSW W + aV V ]
///
/// with S, V, W recomputed from `field` and d/dx evaluated spectrally.
SpinorField rhs(const SpinorField& field, const CouplingConfig& coupling);

/// The same time derivative written out component by component in the
/// reduced form of each named mode (vector, scalar, spin/pseudo-spin,
/// pseudo-scalar, or the alpha_sw = 0 general form). Independent code path
/// from rhs(); GeneralQuartic with alpha_sw != 0 has no reduced form and
/// throws UnsupportedMode.
SpinorField rhs_reduced(const ModePreset& preset, const SpinorField& field);

/// max-norm of rhs(field, preset_to_coupling(preset)) - rhs_reduced(preset, field).
double verify_mode_reduction(const ModePreset& preset, const SpinorField& field);

}  // namespace nld
