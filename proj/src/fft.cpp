#include "nld/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "nld/errors.hpp"

namespace nld {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
    std::lock_guard lock(planner_mutex());
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    if (!in || !out) {
        fftw_free(in);
        fftw_free(out);
        throw std::bad_alloc();
    }
    const int len = static_cast<int>(n);
    // FFTW_ESTIMATE keeps plans (and therefore results) reproducible run to run.
    forward_plan_ = fftw_plan_dft_1d(len, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_plan_ = fftw_plan_dft_1d(len, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    in_ = in;
    out_ = out;
}

FftPlan::~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
    fftw_free(static_cast<fftw_complex*>(in_));
    fftw_free(static_cast<fftw_complex*>(out_));
}

void FftPlan::forward(std::span<const cplx> in, std::span<cplx> out) const {
    if (in.size() != n_ || out.size() != n_) throw GridMismatch("FFT length mismatch");
    auto* buf_in = static_cast<cplx*>(in_);
    auto* buf_out = static_cast<cplx*>(out_);
    std::copy(in.begin(), in.end(), buf_in);
    fftw_execute(static_cast<fftw_plan>(forward_plan_));
    std::copy(buf_out, buf_out + n_, out.begin());
}

void FftPlan::inverse(std::span<const cplx> in, std::span<cplx> out) const {
    if (in.size() != n_ || out.size() != n_) throw GridMismatch("FFT length mismatch");
    auto* buf_in = static_cast<cplx*>(in_);
    auto* buf_out = static_cast<cplx*>(out_);
    std::copy(in.begin(), in.end(), buf_in);
    fftw_execute(static_cast<fftw_plan>(backward_plan_));
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = buf_out[j] * scale;
}

const FftPlan& fft_for(std::size_t n) {
    thread_local std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FftPlan>(n);
    return *slot;
}

}  // namespace nld
