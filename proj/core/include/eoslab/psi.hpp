#pragma once

/// The psi-calculus: growth functions psi(p) on [alpha, inf), exponential
/// Orlicz N-functions N(u) = exp(W(log u)) and the duality between them.

#include <optional>
#include <string>

#include "eoslab/convex.hpp"

namespace eoslab {

/// Member of the class Psi: positive, strictly increasing, with p log psi(p)
/// convex and psi(p) -> inf. Construction validates these on a sample grid.
struct PsiFunction {
    double alpha = 2.0;  // lower endpoint of the p-domain
    ScalarFn eval;
    std::string kind;  // "power" | "from-young" | "tabulated" | "product" | ...

    double operator()(double p) const { return eval(p); }
};

/// Validates the Psi-class invariants on a log-spaced sample of [alpha, p_hi]
/// and throws std::invalid_argument on failure.
PsiFunction make_psi(double alpha, ScalarFn eval, std::string kind,
                     double p_hi = 1e4);

/// psi_m(p) = p^(1/m).
PsiFunction psi_power(double m, double alpha = 2.0);

/// Orlicz N-function. log_eval is the primary representation so quadrature
/// against huge values stays in log space; eval = exp(log_eval).
struct NFunction {
    ScalarFn log_eval;  // u -> log N(u), -inf at u = 0
    std::optional<YoungFunction> young;
    std::string name;

    struct PiecewiseParams {
        double c1, c2, c3, c4, c5, alpha;
        bool c1_slope_matched;  // false when only continuity could be enforced
    };
    std::optional<PiecewiseParams> piecewise;

    double eval(double u) const;
    double log_at(double u) const { return log_eval(std::abs(u)); }
};

/// psi(W; p) = exp(W*(p) / p).
PsiFunction psi_from_young(const YoungFunction& w, double alpha = 2.0);

/// N([psi], u) = exp([p log psi(p)]*(log u)) for u >= e^2, completed below
/// e^2 by a convex power piece c u^kappa, kappa >= 1, continuous at e^2.
NFunction n_from_psi(const PsiFunction& psi);

/// psi_d(p) = p^d psi(p).
PsiFunction psi_shift_d(const PsiFunction& psi, unsigned d);

/// Piecewise N^(alpha): power c1 |u|^alpha on [0, c2], linear on (c2, c5],
/// N itself above c5 = e^2.
NFunction n_alpha(const NFunction& n, double alpha);

/// N_{m,r}(u) = exp(|u|^m log^{-mr}(C1(r) + |u|)) - 1.
NFunction n_mr(double m, double r = 0.0);

enum class Dominance { Dominated, NotDominated, Inconclusive };

/// Classifies lim psi(p)/theta(p) = 0 on a log-spaced tail grid.
Dominance dominance(const PsiFunction& psi, const PsiFunction& theta,
                    double p_max);

std::string to_string(Dominance d);

/// Kernel recovered from an exponential N-function: W(x) = log N(e^x).
YoungFunction young_from_n(const NFunction& n);

}  // namespace eoslab
