#include <doctest.h>

#include <cmath>

#include "eoslab/catalog.hpp"
#include "eoslab/norms.hpp"

using namespace eoslab;
using cd = std::complex<double>;

TEST_CASE("gamma-law moments and exact values") {
    CHECK(g_m_lp_exact(1.0, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(g_m_lp_exact(1.0, 3.0) == doctest::Approx(std::pow(6.0, 1.0 / 3.0)).epsilon(1e-12));
    SpaceSpec s = SpaceSpec::torus(256);
    GridFunction f = g_m(s, 2.0);
    double x = s.nodes[10];
    CHECK(f.values[10].real() ==
          doctest::Approx(std::sqrt(std::abs(std::log(x / 6.28318530717958647692)))));
}

TEST_CASE("two-tailed power function moments") {
    double a = 2.0, b = 8.0, p = 4.0;
    CHECK(f_ab_lp_exact(a, b, p) ==
          doctest::Approx(std::pow(8.0 / 4.0 + 2.0 / 2.0, 0.25)).epsilon(1e-12));
    SpaceSpec s = SpaceSpec::line(1e6, 1 << 14, true, 1e-12);
    GridFunction f = f_ab(s, a, b);
    for (double q : {3.0, 4.0, 6.0})
        CHECK(lp(f, q) == doctest::Approx(f_ab_lp_exact(a, b, q)).epsilon(0.02));
    CHECK_THROWS(f_ab_lp_exact(a, b, 10.0));
}

TEST_CASE("modulated sine series evaluates exactly") {
    ZSeries z = z_series("log", 8, 64);
    SpaceSpec s = SpaceSpec::torus(128);
    GridFunction f = z_function(z, s);
    for (std::size_t j = 0; j < s.nodes.size(); j += 7) {
        double direct = 0.0;
        for (int n = 8; n <= 64; ++n)
            direct += std::log(double(n)) / double(n) * std::sin(n * s.nodes[j]);
        CHECK(std::abs(f.values[j] - cd(direct, 0.0)) < 1e-10);
    }
    // loglog variant scales each term by log log n
    ZSeries z2 = z_series("loglog", 8, 64);
    CHECK(std::abs(z2.fc.at(16)) ==
          doctest::Approx(0.5 * std::log(16.0) * std::log(std::log(16.0)) / 16.0)
              .epsilon(1e-12));
}

TEST_CASE("series evaluation matches on graded grids") {
    ZSeries z = z_series("log", 8, 32);
    SpaceSpec g = SpaceSpec::torus(1 << 8, true);
    GridFunction f = z_function(z, g);
    for (std::size_t j = 0; j < g.nodes.size(); j += 17) {
        double direct = 0.0;
        for (int n = 8; n <= 32; ++n)
            direct += std::log(double(n)) / double(n) * std::sin(n * g.nodes[j]);
        CHECK(std::abs(f.values[j] - cd(direct, 0.0)) < 1e-10);
    }
}

TEST_CASE("random polynomials are deterministic per seed and real-valued") {
    auto a = random_trig(42, 16);
    auto b = random_trig(42, 16);
    auto c = random_trig(43, 16);
    bool same = true, diff = false;
    for (int n = -16; n <= 16; ++n) {
        same = same && a.at(n) == b.at(n);
        diff = diff || a.at(n) != c.at(n);
    }
    CHECK(same);
    CHECK(diff);
    // hermitian coefficients give real samples
    SpaceSpec s = SpaceSpec::torus(64);
    GridFunction f = partial_sum(a, s, 16);
    for (auto v : f.values) CHECK(std::abs(v.imag()) < 1e-12);
}
