#include "nld/spinor_field.hpp"

#include <algorithm>
#include <cmath>

#include "nld/errors.hpp"

namespace nld {

SpinorField::SpinorField(Grid grid)
    : grid_(std::move(grid)), plus_(grid_.size()), minus_(grid_.size()) {}

SpinorField::SpinorField(Grid grid, std::vector<cplx> plus, std::vector<cplx> minus)
    : grid_(std::move(grid)), plus_(std::move(plus)), minus_(std::move(minus)) {
    if (plus_.size() != grid_.size() || minus_.size() != grid_.size())
        throw GridMismatch("spinor component length does not match grid size");
}

bool SpinorField::all_finite() const noexcept {
    auto finite = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return std::all_of(plus_.begin(), plus_.end(), finite) &&
           std::all_of(minus_.begin(), minus_.end(), finite);
}

SpinorField& SpinorField::operator*=(cplx c) noexcept {
    for (auto& z : plus_) z *= c;
    for (auto& z : minus_) z *= c;
    return *this;
}

void require_same_grid(const SpinorField& a, const SpinorField& b) {
    if (!(a.grid() == b.grid())) throw GridMismatch("fields live on different grids");
}

double max_abs_difference(const SpinorField& a, const SpinorField& b) {
    require_same_grid(a, b);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a.plus()[j] - b.plus()[j]));
        worst = std::max(worst, std::abs(a.minus()[j] - b.minus()[j]));
    }
    return worst;
}

std::vector<BilinearSample> bilinears(const SpinorField& field) {
    std::vector<BilinearSample> out(field.size());
    for (std::size_t j = 0; j < field.size(); ++j)
        out[j] = bilinear_at(field.plus()[j], field.minus()[j]);
    return out;
}

std::vector<cplx> spectral_derivative(std::span<const cplx> values, const Grid& grid) {
    if (values.size() != grid.size()) throw GridMismatch("array length does not match grid size");
    const auto& fft = fft_for(grid.size());
    std::vector<cplx> coeffs(grid.size());
    fft.forward(values, coeffs);
    const auto k = grid.derivative_wavenumbers();
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] *= cplx(0.0, k[j]);
    std::vector<cplx> out(grid.size());
    fft.inverse(coeffs, out);
    return out;
}

SpinorField spectral_derivative(const SpinorField& field) {
    return SpinorField(field.grid(), spectral_derivative(field.plus(), field.grid()),
                       spectral_derivative(field.minus(), field.grid()));
}

SpinorField initial_state(const Grid& grid, double a_plus, double a_minus, double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidParameter("mu must be positive and finite");
    if (!std::isfinite(a_plus) || !std::isfinite(a_minus))
        throw InvalidParameter("initial amplitudes must be finite");
    SpinorField field(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        const double sech = 1.0 / std::cosh(mu * x);
        field.plus()[j] = a_plus * sech;
        field.minus()[j] = a_minus * std::tanh(mu * x) * sech;
    }
    return field;
}

}  // namespace nld
