#pragma once

#include <cstdint>

#include "nld/spinor_field.hpp"

namespace nld {

/// Smooth, localized random spinor: a sum of `bumps` Gaussian packets with
/// random complex amplitudes, centres, widths and carrier wavenumbers, kept
/// well inside the box so the periodic extension is smooth to round-off.
SpinorField random_smooth_field(const Grid& grid, std::uint64_t seed, int bumps = 3,
                                double amplitude = 1.0);

/// Band-limited random field: random complex coefficients on the lowest
/// `modes` Fourier modes (positive and negative), zero elsewhere.
SpinorField random_band_limited_field(const Grid& grid, std::uint64_t seed, int modes = 8);

}  // namespace nld
