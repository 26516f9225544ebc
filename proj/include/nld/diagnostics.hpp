#pragma once

#include "nld/coupling.hpp"
#include "nld/spinor_field.hpp"

namespace nld {

struct DiagnosticsRecord {
    double t;
    double charge;
    double energy;
    double momentum;
    double max_amp;
};

/// Q = sum_j V_j dx. The rectangle rule is spectrally accurate for smooth
/// periodic integrands.
double charge(const SpinorField& field);

/// E = int [ m S + Re(conj(psi+) psi-' - conj(psi-) psi+')
///           + aS S^2/2 + aV V^2/2 - aW W^2/2 - aSW S W ] dx
///
/// The quartic part is the potential whose psi* derivative reproduces the
/// bilinear-dependent entries of the dynamics, so E is a constant of motion.
double energy(const SpinorField& field, const CouplingConfig& coupling);

/// P = int Im(conj(psi+) psi+' + conj(psi-) psi-') dx.
double momentum(const SpinorField& field);

/// max_j max(|psi+_j|, |psi-_j|)
double max_amplitude(const SpinorField& field);

DiagnosticsRecord measure(double t, const SpinorField& field, const CouplingConfig& coupling);

}  // namespace nld
