#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace nld {

using cplx = std::complex<double>;

/// FFTW plan pair for one transform length. Owns aligned scratch buffers, so
/// an instance must not be shared between threads; use fft_for() to obtain
/// the calling thread's cached instance.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    std::size_t size() const noexcept { return n_; }

    /// out_k = sum_j in_j exp(-2 pi i j k / n)
    void forward(std::span<const cplx> in, std::span<cplx> out) const;
    /// Normalized inverse: inverse(forward(f)) == f.
    void inverse(std::span<const cplx> in, std::span<cplx> out) const;

private:
    std::size_t n_;
    void* in_;
    void* out_;
    void* forward_plan_;
    void* backward_plan_;
};

const FftPlan& fft_for(std::size_t n);

}  // namespace nld
