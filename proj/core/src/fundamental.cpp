#include "eoslab/fundamental.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "eoslab/convex.hpp"

namespace eoslab {

FundamentalPoint phi_g_alpha_m(double delta, double alpha, double m) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("phi_g_alpha_m: delta must lie in (0,1)");
    if (!(alpha >= 1.0) || !(m > 0.0))
        throw std::invalid_argument("phi_g_alpha_m: need alpha >= 1, m > 0");
    FundamentalPoint pt;
    pt.delta = delta;
    const double split = std::exp(-alpha / m);
    if (delta <= split) {
        // interior maximum of delta^(1/p) p^(-1/m) at p* = m |log delta|
        pt.value = std::pow(std::exp(1.0) * m * std::abs(std::log(delta)), -1.0 / m);
        pt.branch = "interior";
    } else {
        // supremum pinned at the edge p = alpha
        pt.value = std::pow(alpha, -1.0 / m) * std::pow(delta, 1.0 / alpha);
        pt.branch = "edge";
    }
    return pt;
}

FundamentalPoint phi_g_abab(double delta, double a, double b, double alpha,
                            double beta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("phi_g_abab: delta must lie in (0,1)");
    if (!(1.0 <= a) || !(a < b))
        throw std::invalid_argument("phi_g_abab: need 1 <= a < b");
    const double h = std::min(0.5 * (a + b), 2.0 * a);
    const double L = std::abs(std::log(delta));  // log delta = -L

    // branch over (a, h): zeta = (p-a)^alpha, maximize delta^(1/p)(p-a)^alpha
    double phi1;
    std::string b1;
    if (alpha > 0.0) {
        const double delta1 = std::exp(-alpha * h * h / (h - a));
        if (delta >= delta1) {
            double disc = L * L / (4.0 * alpha * alpha) - a * L / alpha;
            double p1 = L / (2.0 * alpha) - std::sqrt(std::max(disc, 0.0));
            phi1 = std::pow(delta, 1.0 / p1) * std::pow(p1 - a, alpha);
            b1 = "low-interior";
        } else {
            phi1 = std::pow(delta, 1.0 / h) * std::pow(h - a, alpha);
            b1 = "low-junction";
        }
    } else {
        phi1 = std::pow(delta, 1.0 / h);  // zeta = 1, sup at p -> h
        b1 = "low-junction";
    }

    // branch over [h, b): zeta = (b-p)^beta
    double phi2;
    std::string b2;
    if (beta > 0.0) {
        const double delta2 = std::exp(-h * h * beta / (b - h));
        if (delta < delta2) {
            double disc = L * L / (4.0 * beta * beta) + b * L / beta;
            double p2 = -L / (2.0 * beta) + std::sqrt(disc);
            phi2 = std::pow(delta, 1.0 / p2) * std::pow(b - p2, beta);
            b2 = "high-interior";
        } else {
            phi2 = std::pow(delta, 1.0 / h) * std::pow(b - h, beta);
            b2 = "high-junction";
        }
    } else {
        phi2 = std::pow(delta, 1.0 / b);  // zeta = 1, sup at p -> b
        b2 = "high-junction";
    }

    FundamentalPoint pt;
    pt.delta = delta;
    if (phi1 >= phi2) { pt.value = phi1; pt.branch = b1; }
    else { pt.value = phi2; pt.branch = b2; }
    return pt;
}

double phi_empirical(const SpaceSpec& space, double delta,
                     const std::function<double(const GridFunction&)>& norm) {
    GridFunction ind = indicator(space, delta);
    return norm(ind);
}

namespace {

template <typename F>
FundamentalCurve sample_curve(double lo, double hi, std::size_t n, F&& eval) {
    FundamentalCurve c;
    for (double d : log_grid(lo, hi, n)) c.points.push_back(eval(d));
    return c;
}

}  // namespace

FundamentalCurve curve_g_alpha_m(double alpha, double m, double delta_lo,
                                 double delta_hi, std::size_t n) {
    return sample_curve(delta_lo, delta_hi, n,
                        [&](double d) { return phi_g_alpha_m(d, alpha, m); });
}

FundamentalCurve curve_g_abab(double a, double b, double alpha, double beta,
                              double delta_lo, double delta_hi, std::size_t n) {
    return sample_curve(delta_lo, delta_hi, n,
                        [&](double d) { return phi_g_abab(d, a, b, alpha, beta); });
}

void write_curve_csv(const FundamentalCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_curve_csv: cannot open " + path);
    out << "delta,value,branch\n";
    out.precision(17);
    for (const auto& p : c.points)
        out << p.delta << ',' << p.value << ',' << p.branch << '\n';
}

}  // namespace eoslab
