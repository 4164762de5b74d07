#pragma once

#include <cstdint>
#include <string>

#include "eoslab/fourier.hpp"
#include "eoslab/space.hpp"

namespace eoslab {

/// Logarithmic singularity |log(x / 2pi)|^(1/m) on the torus. Against the
/// normalized measure its distribution is exactly exp(-u^m), so
/// |g_m|_p = Gamma(p/m + 1)^(1/p).
GridFunction g_m(const SpaceSpec& torus, double m);
double g_m_lp_exact(double m, double p);

/// Two-tailed power function on the half line: x^(-1/b) on (0,1),
/// x^(-1/a) on [1, inf); zero for x <= 0. For a < p < b,
/// |f|_p = (b/(b-p) + a/(p-a))^(1/p).
GridFunction f_ab(const SpaceSpec& line, double a, double b);
double f_ab_lp_exact(double a, double b, double p);

/// Lacunary-free slowly modulated sine series
///   z(x) = sum_{n = n_min}^{n_max} L(n)/n * sin(n x),
/// with L(n) = log n ("log") or log n * log log n ("loglog").
struct ZSeries {
    std::string variant;
    int n_min = 8;
    int n_max = 1 << 20;
    FourierCoeffs fc;
};

ZSeries z_series(const std::string& variant, int n_min = 8, int n_max = 1 << 20);

/// Evaluate the full series on a torus grid (exact truncated-series values).
GridFunction z_function(const ZSeries& z, const SpaceSpec& torus);

/// Real-valued random trigonometric polynomial of the given degree with
/// independent standard normal cos/sin amplitudes. The generator is
/// mt19937_64 with an explicit Box-Muller transform, so a seed fixes the
/// polynomial exactly across runs.
FourierCoeffs random_trig(std::uint64_t seed, int degree);

}  // namespace eoslab
