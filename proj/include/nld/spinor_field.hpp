#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nld/fft.hpp"
#include "nld/grid.hpp"

namespace nld {

/// Pointwise quadratic densities of a two-component spinor:
///   S = |psi+|^2 - |psi-|^2, V = |psi+|^2 + |psi-|^2, W = -2 Re(conj(psi+) psi-).
struct BilinearSample {
    double S;
    double V;
    double W;
};

inline BilinearSample bilinear_at(cplx up, cplx down) noexcept {
    const double np = std::norm(up);
    const double nm = std::norm(down);
    return {np - nm, np + nm, -2.0 * (up.real() * down.real() + up.imag() * down.imag())};
}

/// Two-component complex field (psi+, psi-) sampled on a periodic grid,
/// stored as two separate arrays.
class SpinorField {
public:
    explicit SpinorField(Grid grid);
    SpinorField(Grid grid, std::vector<cplx> plus, std::vector<cplx> minus);

    const Grid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return plus_.size(); }

    std::span<cplx> plus() noexcept { return plus_; }
    std::span<const cplx> plus() const noexcept { return plus_; }
    std::span<cplx> minus() noexcept { return minus_; }
    std::span<const cplx> minus() const noexcept { return minus_; }

    bool all_finite() const noexcept;

    /// Multiply both components by a constant.
    SpinorField& operator*=(cplx c) noexcept;

private:
    Grid grid_;
    std::vector<cplx> plus_;
    std::vector<cplx> minus_;
};

/// Throws GridMismatch unless both fields share the same grid.
void require_same_grid(const SpinorField& a, const SpinorField& b);

/// Largest pointwise deviation max_j max(|a+ - b+|, |a- - b-|).
double max_abs_difference(const SpinorField& a, const SpinorField& b);

std::vector<BilinearSample> bilinears(const SpinorField& field);

/// d/dx of a single periodic array by FFT; the Nyquist coefficient is dropped.
std::vector<cplx> spectral_derivative(std::span<const cplx> values, const Grid& grid);

SpinorField spectral_derivative(const SpinorField& field);

/// psi+ = A+ / cosh(mu x), psi- = A- tanh(mu x) / cosh(mu x).
SpinorField initial_state(const Grid& grid, double a_plus, double a_minus, double mu);

}  // namespace nld
