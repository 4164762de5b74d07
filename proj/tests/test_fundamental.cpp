#include <doctest.h>

#include <cmath>

#include "eoslab/convex.hpp"
#include "eoslab/fundamental.hpp"
#include "eoslab/norms.hpp"

using namespace eoslab;

namespace {

// direct numeric oracle: phi(delta) = sup_{p >= alpha} delta^{1/p} / psi(p)
double phi_oracle_power(double delta, double alpha, double m) {
    auto obj = [&](double p) {
        return std::log(delta) / p - std::log(p) / m;
    };
    auto r = maximize_concave(obj, alpha);
    return std::exp(r.value);
}

double phi_oracle_abab(double delta, double a, double b, double alpha,
                       double beta) {
    double h = std::min(0.5 * (a + b), 2.0 * a);
    double best = 0.0;
    for (double s : log_grid(1e-9, 1.0, 4000)) {
        double p1 = a + (h - a) * s;
        best = std::max(best, std::pow(delta, 1.0 / p1) * std::pow(p1 - a, alpha));
        double p2 = b - (b - h) * s;
        best = std::max(best, std::pow(delta, 1.0 / p2) * std::pow(b - p2, beta));
    }
    return best;
}

}  // namespace

TEST_CASE("one-sided closed form matches direct maximization") {
    for (double m : {1.0, 2.0}) {
        for (double alpha : {1.0, 2.0}) {
            for (double d : {0.9, 0.5, 0.1, 1e-2, 1e-5, 1e-12}) {
                double expect = phi_oracle_power(d, alpha, m);
                CHECK(phi_g_alpha_m(d, alpha, m).value ==
                      doctest::Approx(expect).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("one-sided branches meet continuously") {
    double alpha = 2.0, m = 1.0;
    double split = std::exp(-alpha / m);
    double lo = phi_g_alpha_m(split * (1.0 - 1e-10), alpha, m).value;
    double hi = phi_g_alpha_m(split * (1.0 + 1e-10), alpha, m).value;
    CHECK(std::abs(lo - hi) < 1e-9);
    CHECK(phi_g_alpha_m(split, alpha, m).branch == "interior");
    CHECK(phi_g_alpha_m(split * 1.0001, alpha, m).branch == "edge");
}

TEST_CASE("two-sided closed form matches direct maximization") {
    double a = 2.0, b = 8.0, alpha = 1.0, beta = 0.5;
    for (double d : {0.9, 0.3, 0.05, 1e-3, 1e-8, 1e-20}) {
        double expect = phi_oracle_abab(d, a, b, alpha, beta);
        CHECK(phi_g_abab(d, a, b, alpha, beta).value ==
              doctest::Approx(expect).epsilon(1e-4));
    }
}

TEST_CASE("two-sided branches meet continuously") {
    double a = 2.0, b = 8.0, alpha = 1.0, beta = 0.5;
    double h = std::min(0.5 * (a + b), 2.0 * a);
    double d1 = std::exp(-alpha * h * h / (h - a));
    double d2 = std::exp(-h * h * beta / (b - h));
    for (double d : {d1, d2}) {
        double lo = phi_g_abab(d * (1.0 - 1e-10), a, b, alpha, beta).value;
        double hi = phi_g_abab(d * (1.0 + 1e-10), a, b, alpha, beta).value;
        CHECK(std::abs(lo - hi) / hi < 1e-8);
    }
}

TEST_CASE("curves are increasing and quasi-concave in delta") {
    auto c = curve_g_alpha_m(2.0, 1.0, 1e-10, 0.9, 200);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        CHECK(c.points[i].value >= c.points[i - 1].value);
        // phi(delta)/delta decreasing
        CHECK(c.points[i].value / c.points[i].delta <=
              c.points[i - 1].value / c.points[i - 1].delta * (1.0 + 1e-12));
    }
}

TEST_CASE("empirical fundamental function tracks the closed form") {
    SpaceSpec s = SpaceSpec::torus(1 << 13, true);
    PsiFunction psi = psi_power(1.0);
    auto norm = [&](const GridFunction& g) { return g_psi(g, 2.0, psi).value; };
    for (double d : {0.2, 0.02, 1e-3}) {
        GridFunction ind = indicator(s, d);
        double attained = attained_measure(ind);
        double expect = phi_g_alpha_m(attained, 2.0, 1.0).value;
        CHECK(phi_empirical(s, d, norm) == doctest::Approx(expect).epsilon(0.05));
    }
}
