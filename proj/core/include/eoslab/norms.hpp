#pragma once

/// Norm functionals: L_p and L_p(nu), the Orlicz (Amemiya) norm, the
/// grand-Lebesgue norms G(alpha; psi), G(alpha; psi, nu), G(a, b, alpha, beta)
/// and the L^0 closure test.

#include <string>
#include <vector>

#include "eoslab/psi.hpp"
#include "eoslab/space.hpp"

namespace eoslab {

struct NormReport {
    double value = 0.0;
    double argmax_p = 0.0;   // sup-type norms
    double argmin_v = 0.0;   // Orlicz norm
    bool infinite = false;
    bool boundary_sup = false;  // sup attained at the p-grid edge: possibly infinite
    std::string diagnostics;
};

/// Default p-grid for the sup-type norms: log-spaced on [alpha, 256].
std::vector<double> default_p_grid(double alpha, double p_max = 256.0,
                                   std::size_t n = 200);

/// |f|_p = (sum w_i |f_i|^p)^(1/p), computed in log space.
double lp(const GridFunction& f, double p);

/// |f|_p(nu) = (sum w_i |x_i|^(p-2) |f_i|^p)^(1/p); requires a line-nu space
/// and p >= 2.
double lp_nu(const GridFunction& f, double p);

/// ||f||L(N) = inf_{v>0} v^(-1) (1 + int N(v |f|) dmu). Log-spaced v-scan on
/// [1e-6, 1e6] followed by golden-section refinement. The infinite flag fires
/// when the minimized objective exceeds 1e12 or when the grid tail of |f| is
/// unresolved-singular and its extrapolated distribution decays slower than N
/// grows (the integral would diverge beyond the truncation for every v).
NormReport orlicz(const GridFunction& f, const NFunction& n);

/// ||f||G(alpha; psi) = sup_{p >= alpha} |f|_p / psi(p) over the p-grid.
NormReport g_psi(const GridFunction& f, double alpha, const PsiFunction& psi,
                 double p_max = 256.0);

/// ||f||G(alpha; psi, nu), line-nu spaces, alpha >= 2.
NormReport g_psi_nu(const GridFunction& f, double alpha, const PsiFunction& psi,
                    double p_max = 256.0);

/// ||f||G(a,b,alpha,beta) = sup_{p in (a,b)} |f|_p zeta(p) with
/// zeta = (p-a)^alpha on (a,h), (b-p)^beta on [h,b), h = min((a+b)/2, 2a).
NormReport g_abab(const GridFunction& f, double a, double b, double alpha,
                  double beta);

enum class L0Class { InL0, NotInL0, Inconclusive };

/// Theorem-8 style criterion: trend of |f|_p / psi(p) on the grid tail.
L0Class l0_test(const GridFunction& f, const PsiFunction& psi,
                double p_max = 256.0);

std::string to_string(L0Class c);

/// Layer-cake evaluation of |f|_p^p = p int_0^inf u^(p-1) T(|f|,u) du by
/// log-u quadrature; independent route used for cross-checks.
double lp_layer_cake(const GridFunction& f, double p, std::size_t n_u = 4000);

}  // namespace eoslab
