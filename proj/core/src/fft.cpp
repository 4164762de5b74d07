#include "eoslab/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace eoslab {

namespace {

std::mutex plan_mutex;  // FFTW planning is not thread-safe

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in,
                                      int sign) {
    if (in.empty()) throw std::invalid_argument("fft: empty input");
    const int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> out(in.size());
    // FFTW_ESTIMATE does not touch the arrays during planning, so planning on
    // the live buffers is safe.
    auto* src = const_cast<fftw_complex*>(
        reinterpret_cast<const fftw_complex*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(n, src, dst, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fft: FFTW planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> fft_forward(
    const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> fft_backward(
    const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_BACKWARD);
}

}  // namespace eoslab
