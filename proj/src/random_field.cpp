#include "nld/random_field.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace nld {

SpinorField random_smooth_field(const Grid& grid, std::uint64_t seed, int bumps, double amplitude) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double centre = 0.5 * (grid.x_min() + grid.x_max());
    const double half = 0.5 * grid.length();
    SpinorField f(grid);
    for (auto comp : {0, 1}) {
        auto values = comp == 0 ? f.plus() : f.minus();
        for (int b = 0; b < bumps; ++b) {
            const cplx amp = amplitude * cplx(unit(rng), unit(rng));
            const double x0 = centre + 0.25 * half * unit(rng);
            const double width = 1.0 + 0.5 * (1.0 + unit(rng));
            const double k0 = 2.0 * unit(rng);
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const double s = (grid.x(j) - x0) / width;
                values[j] += amp * std::exp(-s * s) * std::polar(1.0, k0 * grid.x(j));
            }
        }
    }
    return f;
}

SpinorField random_band_limited_field(const Grid& grid, std::uint64_t seed, int modes) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    SpinorField f(grid);
    for (auto comp : {0, 1}) {
        auto values = comp == 0 ? f.plus() : f.minus();
        for (int q = -modes; q <= modes; ++q) {
            const cplx c(normal(rng), normal(rng));
            const double kq = 2.0 * std::numbers::pi * q / grid.length();
            for (std::size_t j = 0; j < grid.size(); ++j)
                values[j] += c * std::polar(1.0, kq * (grid.x(j) - grid.x_min()));
        }
    }
    return f;
}

}  // namespace nld
