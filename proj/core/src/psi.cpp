#include "eoslab/psi.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace eoslab {

namespace {
constexpr double kE2 = 7.38905609893065;  // e^2, the EOF crossover point
}

PsiFunction make_psi(double alpha, ScalarFn eval, std::string kind, double p_hi) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("psi: alpha must be >= 1");
    auto grid = log_grid(alpha, std::max(p_hi, 4.0 * alpha), 64);
    std::vector<double> v(grid.size()), g(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        v[i] = eval(grid[i]);
        if (!(v[i] > 0.0) || !std::isfinite(v[i]))
            throw std::invalid_argument("psi: must be positive finite on [alpha, p_hi]");
        g[i] = grid[i] * std::log(v[i]);
        if (i > 0 && !(v[i] > v[i - 1]))
            throw std::invalid_argument("psi: must be strictly increasing");
    }
    if (!(v.back() > v.front()))
        throw std::invalid_argument("psi: must be unbounded (psi(p_hi) > psi(alpha))");
    // convexity of p log psi(p): discrete second differences on the sample
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        double s1 = (g[i] - g[i - 1]) / (grid[i] - grid[i - 1]);
        double s2 = (g[i + 1] - g[i]) / (grid[i + 1] - grid[i]);
        double scale = std::max({std::abs(s1), std::abs(s2), 1.0});
        if (s2 < s1 - 1e-7 * scale)
            throw std::invalid_argument("psi: p log psi(p) must be convex");
    }
    PsiFunction psi;
    psi.alpha = alpha;
    psi.eval = std::move(eval);
    psi.kind = std::move(kind);
    return psi;
}

PsiFunction psi_power(double m, double alpha) {
    if (!(m > 0.0)) throw std::invalid_argument("psi_power: m must be positive");
    return make_psi(alpha, [m](double p) { return std::pow(p, 1.0 / m); }, "power");
}

double NFunction::eval(double u) const {
    double lu = log_eval(std::abs(u));
    return std::isinf(lu) && lu < 0.0 ? 0.0 : std::exp(lu);
}

PsiFunction psi_from_young(const YoungFunction& w, double alpha) {
    auto lt = std::make_shared<LegendreTransform>(w);
    auto eval = [lt](double p) {
        MaxResult r = lt->at(p);
        if (r.unbounded) return std::numeric_limits<double>::infinity();
        return std::exp(r.value / p);
    };
    return make_psi(alpha, eval, "from-young");
}

NFunction n_from_psi(const PsiFunction& psi) {
    auto p_eval = std::make_shared<ScalarFn>(psi.eval);
    const double alpha = psi.alpha;
    // G(p) = p log psi(p) is convex, so x -> G*(x) comes from a concave search.
    auto gstar = [p_eval, alpha](double x) {
        return maximize_concave(
                   [&](double p) { return p * (x - std::log((*p_eval)(p))); }, alpha)
            .value;
    };
    const double g2 = gstar(2.0);
    const double h = 1e-5;
    const double kappa = std::max(1.0, (gstar(2.0 + h) - g2) / h);
    NFunction n;
    n.name = "N[" + psi.kind + "]";
    n.log_eval = [gstar, g2, kappa](double u) {
        u = std::abs(u);
        if (u == 0.0) return -std::numeric_limits<double>::infinity();
        double x = std::log(u);
        if (x >= 2.0) return gstar(x);
        return g2 + kappa * (x - 2.0);  // power completion c u^kappa below e^2
    };
    return n;
}

PsiFunction psi_shift_d(const PsiFunction& psi, unsigned d) {
    if (d == 0) return psi;
    ScalarFn base = psi.eval;
    return make_psi(psi.alpha,
                    [base, d](double p) { return std::pow(p, double(d)) * base(p); },
                    "product");
}

NFunction n_alpha(const NFunction& n, double alpha) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("n_alpha: alpha must be >= 1");
    const double c5 = kE2;
    const double log_n5 = n.log_at(c5);
    if (!(log_n5 < 600.0))
        throw std::invalid_argument("n_alpha: N(e^2) too large to glue in double");
    const double n5 = std::exp(log_n5);
    const double fd = 1e-6;
    const double s5 = (std::exp(n.log_at(c5 * (1.0 + fd))) - n5) / (c5 * fd);

    double c1, c2, c3, c4;
    bool slope_matched = true;
    if (alpha > 1.0) {
        // Value-and-slope matching with the tangent line of N at c5.
        c4 = s5;
        c3 = n5 - c4 * c5;
        c2 = (c3 < 0.0) ? alpha * (-c3) / ((alpha - 1.0) * c4) : c5 / 2.0;
        if (c3 < 0.0 && c2 > 0.0 && c2 < c5) {
            c1 = c4 / (alpha * std::pow(c2, alpha - 1.0));
        } else {
            // Tangent gluing infeasible (exponential N too steep at c5):
            // fix c2 = c5/2, match value and slope of the power piece at c2
            // and continuity at c5; the c5 junction keeps slope monotone
            // whenever u N'(u)/N(u) >= 2 alpha/(alpha+1) there.
            slope_matched = false;
            c2 = c5 / 2.0;
            const double denom = std::pow(c2, alpha - 1.0) *
                                 (c2 * (1.0 - alpha) + alpha * c5);
            c1 = n5 / denom;
            c4 = alpha * c1 * std::pow(c2, alpha - 1.0);
            c3 = (1.0 - alpha) * c1 * std::pow(c2, alpha);
        }
    } else {
        // alpha = 1: a single chord from the origin.
        c2 = c5 / 2.0;
        c1 = n5 / c5;
        c4 = c1;
        c3 = 0.0;
    }
    if (!(c4 <= s5 * (1.0 + 1e-9)))
        slope_matched = false;  // convexity at c5 not certified; flagged

    NFunction out;
    out.name = n.name + "^(" + std::to_string(alpha) + ")";
    out.piecewise = NFunction::PiecewiseParams{c1, c2, c3, c4, c5, alpha, slope_matched};
    ScalarFn base = n.log_eval;
    out.log_eval = [base, c1, c2, c3, c4, c5, alpha](double u) {
        u = std::abs(u);
        if (u == 0.0) return -std::numeric_limits<double>::infinity();
        if (u <= c2) return std::log(c1) + alpha * std::log(u);
        if (u <= c5) return std::log(c3 + c4 * u);
        return base(u);
    };
    out.young = n.young;
    return out;
}

NFunction n_mr(double m, double r) {
    if (!(m > 0.0)) throw std::invalid_argument("n_mr: m must be positive");
    const double c1 = (r <= 0.0) ? std::exp(1.0) : std::exp(r);
    NFunction n;
    n.name = "N_{" + std::to_string(m) + "," + std::to_string(r) + "}";
    n.log_eval = [m, r, c1](double u) {
        u = std::abs(u);
        if (u == 0.0) return -std::numeric_limits<double>::infinity();
        const double t = std::pow(u, m) * std::pow(std::log(c1 + u), -m * r);
        if (t > 36.0) return t;  // log(e^t - 1) = t to machine precision
        if (t < 1e-300) return -std::numeric_limits<double>::infinity();
        return std::log(std::expm1(t));
    };
    return n;
}

Dominance dominance(const PsiFunction& psi, const PsiFunction& theta, double p_max) {
    const double lo = std::max(psi.alpha, theta.alpha);
    if (!(p_max > lo)) throw std::invalid_argument("dominance: p_max too small");
    auto grid = log_grid(lo, p_max, 200);
    std::vector<double> ratio(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        ratio[i] = psi.eval(grid[i]) / theta.eval(grid[i]);
    switch (classify_trend(ratio)) {
        case Trend::DecaysToZero: return Dominance::Dominated;
        case Trend::BoundedPositive:
        case Trend::Grows: return Dominance::NotDominated;
        default: return Dominance::Inconclusive;
    }
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::Dominated: return "dominated";
        case Dominance::NotDominated: return "not-dominated";
        default: return "inconclusive";
    }
}

YoungFunction young_from_n(const NFunction& n) {
    ScalarFn base = n.log_eval;
    YoungFunction w;
    w.domain_lo = 2.0;
    w.eval = [base](double x) { return base(std::exp(x)); };
    return w;
}

}  // namespace eoslab
