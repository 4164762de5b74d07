#pragma once

#include <complex>
#include <vector>

#include "eoslab/space.hpp"

namespace eoslab {

/// Coefficients c(n) = integral of e^{inx} f(x) against the normalized
/// torus measure dx / 2pi, for |n| <= m_max. The synthesis convention is
/// f(x) ~ sum_n c(n) e^{-inx}, so coefficient extraction followed by a full
/// partial sum reproduces trigonometric polynomials exactly.
struct FourierCoeffs {
    int m_max = 0;
    std::vector<std::complex<double>> c;  // index n + m_max

    std::complex<double> at(int n) const { return c[static_cast<std::size_t>(n + m_max)]; }
    std::complex<double>& at(int n) { return c[static_cast<std::size_t>(n + m_max)]; }
};

/// Compute c(n) for |n| <= m_max. Uniform torus grids use an FFT with the
/// half-cell phase twist; graded grids use per-node recurrence sums.
FourierCoeffs coeffs(const GridFunction& f, int m_max);

/// Partial sum s_M[f](x) = sum_{|n| <= M} c(n) e^{-inx} sampled on `space`.
GridFunction partial_sum(const FourierCoeffs& fc, const SpaceSpec& space, int m);

/// Partial sums at several cutoffs in one pass (increasing checkpoints).
std::vector<GridFunction> partial_sum_snapshots(const FourierCoeffs& fc,
                                                const SpaceSpec& space,
                                                const std::vector<int>& checkpoints);

/// Conjugate-function multiplier: c(k) -> i sgn(k) c(k). In this synthesis
/// convention it maps cos(nx) to sin(nx).
FourierCoeffs hilbert(const FourierCoeffs& fc);

/// Transform on the line: F(t_k) = integral of e^{i t x} f(x) dx, evaluated
/// on the dual offset grid with spacing dt = pi / x_max and as many nodes as
/// the spatial grid, which makes the discrete map exactly unitary on uniform
/// offset grids (Parseval holds to round-off).
struct LineTransform {
    std::vector<double> t;
    std::vector<std::complex<double>> values;
    double dt = 0.0;
    bool boundary_warning = false;  // |f| not small at the ends of the box
};

LineTransform line_transform(const GridFunction& f);

/// Inverse of `line_transform` after zeroing all |t| > t_cut: the
/// band-limited projection S_M f sampled back on `space`.
GridFunction band_limit(const LineTransform& ft, const SpaceSpec& space,
                        double t_cut);

/// Haar partial sum on [0,1) sampled on a uniform offset grid with 2^k nodes;
/// basis order: constant, then wavelets level by level, left to right. The
/// discrete system is exactly orthonormal, so the projector is idempotent.
GridFunction haar_partial(const GridFunction& f, int m);

/// True when a norm trace along increasing cutoffs has stopped decreasing:
/// the minimum of the last quarter is at least half the median of the first
/// quarter. Used to flag divergence of partial-sum approximations.
bool detect_floor(const std::vector<double>& trace);

}  // namespace eoslab
