#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace nld {

/// Uniform periodic lattice on [x_min, x_max). The point x_max is identified
/// with x_min, so the stored abscissae are x_min + j*dx for j = 0..n-1.
class Grid {
public:
    static constexpr std::size_t min_points = 8;

    Grid(double x_min, double x_max, std::size_t n_points);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    double length() const noexcept { return x_max_ - x_min_; }
    double dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return n_; }

    double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx_; }
    std::vector<double> points() const;

    /// Discrete Fourier frequencies 2*pi*j'/L in FFT ordering (signed j').
    std::span<const double> wavenumbers() const noexcept { return *k_; }

    /// Same as wavenumbers() but with the Nyquist entry set to zero; this is
    /// the symbol used for d/dx and for the linear propagator.
    std::span<const double> derivative_wavenumbers() const noexcept { return *k_deriv_; }

    double max_wavenumber() const noexcept;

    /// Index whose abscissa is closest to x (periodic wrap applied).
    std::size_t nearest_index(double x) const noexcept;

    friend bool operator==(const Grid& a, const Grid& b) noexcept {
        return a.n_ == b.n_ && a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_;
    }

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_;
    std::shared_ptr<const std::vector<double>> k_;
    std::shared_ptr<const std::vector<double>> k_deriv_;
};

}  // namespace nld
