#include "nld/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nld/errors.hpp"

namespace nld {

Grid::Grid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
        throw InvalidParameter("grid bounds must be finite with x_max > x_min");
    if (n_points < min_points)
        throw InvalidParameter("grid needs at least " + std::to_string(min_points) + " points");
    dx_ = (x_max - x_min) / static_cast<double>(n_points);

    const double base = 2.0 * std::numbers::pi / (x_max - x_min);
    const auto n = static_cast<long>(n_points);
    std::vector<double> k(n_points);
    for (long j = 0; j < n; ++j) {
        const long signed_index = (j <= (n - 1) / 2) ? j : j - n;
        k[static_cast<std::size_t>(j)] = base * static_cast<double>(signed_index);
    }
    std::vector<double> kd = k;
    if (n_points % 2 == 0) kd[n_points / 2] = 0.0;

    k_ = std::make_shared<const std::vector<double>>(std::move(k));
    k_deriv_ = std::make_shared<const std::vector<double>>(std::move(kd));
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(n_);
    for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
    return xs;
}

double Grid::max_wavenumber() const noexcept {
    return std::numbers::pi / dx_;
}

std::size_t Grid::nearest_index(double xv) const noexcept {
    const double L = length();
    double shifted = std::fmod(xv - x_min_, L);
    if (shifted < 0) shifted += L;
    auto j = static_cast<std::size_t>(std::llround(shifted / dx_));
    return j % n_;
}

}  // namespace nld
