#include "nld/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace nld {

double charge(const SpinorField& field) {
    double sum = 0.0;
    for (std::size_t j = 0; j < field.size(); ++j)
        sum += std::norm(field.plus()[j]) + std::norm(field.minus()[j]);
    return sum * field.grid().dx();
}

double energy(const SpinorField& field, const CouplingConfig& c) {
    const auto dplus = spectral_derivative(field.plus(), field.grid());
    const auto dminus = spectral_derivative(field.minus(), field.grid());
    double sum = 0.0;
    for (std::size_t j = 0; j < field.size(); ++j) {
        const cplx p = field.plus()[j];
        const cplx q = field.minus()[j];
        const auto [S, V, W] = bilinear_at(p, q);
        const double kinetic = (std::conj(p) * dminus[j] - std::conj(q) * dplus[j]).real();
        const double quartic = 0.5 * c.alpha_s * S * S + 0.5 * c.alpha_v * V * V -
                               0.5 * c.alpha_w * W * W - c.alpha_sw * S * W;
        sum += c.m * S + kinetic + quartic;
    }
    return sum * field.grid().dx();
}

double momentum(const SpinorField& field) {
    const auto dplus = spectral_derivative(field.plus(), field.grid());
    const auto dminus = spectral_derivative(field.minus(), field.grid());
    double sum = 0.0;
    for (std::size_t j = 0; j < field.size(); ++j)
        sum += (std::conj(field.plus()[j]) * dplus[j] + std::conj(field.minus()[j]) * dminus[j]).imag();
    return sum * field.grid().dx();
}

double max_amplitude(const SpinorField& field) {
    double best = 0.0;
    for (std::size_t j = 0; j < field.size(); ++j)
        best = std::max({best, std::abs(field.plus()[j]), std::abs(field.minus()[j])});
    return best;
}

DiagnosticsRecord measure(double t, const SpinorField& field, const CouplingConfig& coupling) {
    return {t, charge(field), energy(field, coupling), momentum(field), max_amplitude(field)};
}

}  // namespace nld
