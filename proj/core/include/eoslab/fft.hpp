#pragma once

#include <complex>
#include <vector>

namespace eoslab {

/// Forward DFT: out[k] = sum_j in[j] exp(-2 pi i j k / n). Any n.
std::vector<std::complex<double>> fft_forward(
    const std::vector<std::complex<double>>& in);

/// Inverse DFT without the 1/n factor: out[j] = sum_k in[k] exp(+2 pi i j k / n).
std::vector<std::complex<double>> fft_backward(
    const std::vector<std::complex<double>>& in);

}  // namespace eoslab
