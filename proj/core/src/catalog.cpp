#include "eoslab/catalog.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace eoslab {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
using cd = std::complex<double>;
}  // namespace

GridFunction g_m(const SpaceSpec& torus, double m) {
    if (torus.kind != SpaceKind::Torus)
        throw std::invalid_argument("g_m: torus space required");
    if (!(m > 0.0)) throw std::invalid_argument("g_m: m must be positive");
    GridFunction f = sample(
        [m](double x) {
            return cd(std::pow(std::abs(std::log(x / kTwoPi)), 1.0 / m), 0.0);
        },
        torus);
    f.meta = "g_m:m=" + std::to_string(m);
    return f;
}

double g_m_lp_exact(double m, double p) {
    return std::exp(std::lgamma(p / m + 1.0) / p);
}

GridFunction f_ab(const SpaceSpec& line, double a, double b) {
    if (line.kind == SpaceKind::Torus)
        throw std::invalid_argument("f_ab: line space required");
    if (!(1.0 <= a) || !(a < b)) throw std::invalid_argument("f_ab: need 1 <= a < b");
    GridFunction f = sample(
        [a, b](double x) {
            if (x <= 0.0) return cd(0.0, 0.0);
            double e = x < 1.0 ? -1.0 / b : -1.0 / a;
            return cd(std::pow(x, e), 0.0);
        },
        line);
    f.meta = "f_ab:a=" + std::to_string(a) + ",b=" + std::to_string(b);
    return f;
}

double f_ab_lp_exact(double a, double b, double p) {
    if (!(a < p) || !(p < b))
        throw std::invalid_argument("f_ab_lp_exact: p outside (a,b)");
    return std::pow(b / (b - p) + a / (p - a), 1.0 / p);
}

ZSeries z_series(const std::string& variant, int n_min, int n_max) {
    if (variant != "log" && variant != "loglog")
        throw std::invalid_argument("z_series: variant must be 'log' or 'loglog'");
    if (n_min < 3 || n_max <= n_min)
        throw std::invalid_argument("z_series: need 3 <= n_min < n_max");
    ZSeries z;
    z.variant = variant;
    z.n_min = n_min;
    z.n_max = n_max;
    z.fc.m_max = n_max;
    z.fc.c.assign(2 * static_cast<std::size_t>(n_max) + 1, cd(0.0, 0.0));
    for (int n = n_min; n <= n_max; ++n) {
        double l = std::log(double(n));
        if (variant == "loglog") l *= std::log(l);
        double amp = l / double(n);
        // sin(nx) = (i/2) e^{-inx} - (i/2) e^{inx} in the synthesis basis
        z.fc.at(n) = cd(0.0, 0.5 * amp);
        z.fc.at(-n) = cd(0.0, -0.5 * amp);
    }
    return z;
}

GridFunction z_function(const ZSeries& z, const SpaceSpec& torus) {
    if (torus.kind != SpaceKind::Torus)
        throw std::invalid_argument("z_function: torus space required");
    GridFunction f = partial_sum(z.fc, torus, z.n_max);
    f.meta = "z:" + z.variant;
    return f;
}

FourierCoeffs random_trig(std::uint64_t seed, int degree) {
    if (degree < 1) throw std::invalid_argument("random_trig: degree must be >= 1");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // 53 high bits -> (0,1]; bit-reproducible for a fixed seed
        return (double(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    auto gauss = [&]() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    };
    FourierCoeffs fc;
    fc.m_max = degree;
    fc.c.assign(2 * static_cast<std::size_t>(degree) + 1, cd(0.0, 0.0));
    fc.at(0) = cd(gauss(), 0.0);
    for (int n = 1; n <= degree; ++n) {
        double a = gauss();  // cos(nx) amplitude
        double b = gauss();  // sin(nx) amplitude
        // cos(nx) -> 1/2 at both +-n; sin(nx) -> +-i/2 (synthesis e^{-inx})
        fc.at(n) = cd(0.5 * a, 0.5 * b);
        fc.at(-n) = cd(0.5 * a, -0.5 * b);
    }
    return fc;
}

}  // namespace eoslab
