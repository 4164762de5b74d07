#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eoslab/space.hpp"

namespace eoslab {

/// One point of a fundamental-function curve phi(delta) = norm of an
/// indicator of measure delta, together with the analytic branch used.
struct FundamentalPoint {
    double delta = 0.0;
    double value = 0.0;
    std::string branch;  // which closed-form branch produced the value
};

struct FundamentalCurve {
    std::vector<FundamentalPoint> points;
};

/// Closed-form fundamental function of the grand space with weight
/// psi(p) = p^(1/m) on p >= alpha. Two branches meeting continuously at
/// delta = exp(-alpha/m):
///   delta <= exp(-alpha/m):  (e m |log delta|)^(-1/m)   (interior maximum)
///   delta >  exp(-alpha/m):  alpha^(-1/m) delta^(1/alpha) (edge p = alpha)
FundamentalPoint phi_g_alpha_m(double delta, double alpha, double m);

/// Closed-form fundamental function of the two-sided grand space with
/// zeta(p) = (p-a)^alpha on (a,h), (b-p)^beta on [h,b), h = min((a+b)/2, 2a).
/// phi = max(phi_1, phi_2) where each factor switches from its interior
/// maximizer to the junction p = h at delta_1 / delta_2 respectively.
FundamentalPoint phi_g_abab(double delta, double a, double b, double alpha,
                            double beta);

/// Empirical fundamental function: norm of a near-indicator of measure
/// ~delta on the given space, evaluated by the supplied norm functional.
/// Returns the attained measure alongside via the indicator machinery.
double phi_empirical(const SpaceSpec& space, double delta,
                     const std::function<double(const GridFunction&)>& norm);

/// Sample a closed-form curve on a log-spaced delta grid.
FundamentalCurve curve_g_alpha_m(double alpha, double m, double delta_lo,
                                 double delta_hi, std::size_t n);
FundamentalCurve curve_g_abab(double a, double b, double alpha, double beta,
                              double delta_lo, double delta_hi, std::size_t n);

void write_curve_csv(const FundamentalCurve& c, const std::string& path);

}  // namespace eoslab
