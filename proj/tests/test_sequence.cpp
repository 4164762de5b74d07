#include <doctest.h>

#include <cmath>

#include "eoslab/psi.hpp"
#include "eoslab/sequence.hpp"

using namespace eoslab;

TEST_CASE("sequence lp on singletons and pairs") {
    SequenceData one = make_sequence({5}, {{1.0, 0.0}});
    CHECK(seq_lp(one, 3.0) == doctest::Approx(1.0));
    SequenceData pair = make_sequence({-2, 7}, {{1.0, 0.0}, {1.0, 0.0}});
    for (double p : {1.0, 2.0, 8.0})
        CHECK(seq_lp(pair, p) == doctest::Approx(std::pow(2.0, 1.0 / p)).epsilon(1e-12));
}

TEST_CASE("nu-weighted sequence norm") {
    // single unit entry at n = 1: weight |1|^(p-2) + 1 = 2 for every p
    SequenceData e1 = make_sequence({1}, {{1.0, 0.0}});
    for (double p : {2.0, 4.0, 16.0})
        CHECK(seq_lp_nu(e1, p) == doctest::Approx(std::pow(2.0, 1.0 / p)).epsilon(1e-12));
    // entry at n = 0 carries weight 1
    SequenceData e0 = make_sequence({0}, {{3.0, 0.0}});
    CHECK(seq_lp_nu(e0, 4.0) == doctest::Approx(3.0).epsilon(1e-12));
    // entry at n = 2: weight 2^(p-2) + 1
    SequenceData e2 = make_sequence({2}, {{1.0, 0.0}});
    double p = 6.0;
    CHECK(seq_lp_nu(e2, p) ==
          doctest::Approx(std::pow(std::pow(2.0, p - 2.0) + 1.0, 1.0 / p)).epsilon(1e-12));
}

TEST_CASE("grand sequence norm on a singleton") {
    // |c|_p = 1 for all p, so the sup of (p-a)^alpha over p in (a, p_max]
    // sits at the upper grid edge with value (p_max - a)^alpha
    SequenceData one = make_sequence({3}, {{1.0, 0.0}});
    auto rep = seq_g_a_alpha(one, 2.0, 1.0, 64.0);
    CHECK(rep.value == doctest::Approx(62.0).epsilon(1e-6));
    CHECK(rep.boundary_sup);
}

TEST_CASE("grand sequence norm decays for summable tails") {
    // geometric decay: |c|_p bounded, weight 1/psi(p) with psi = p drives the
    // ratio to zero, so the sup is attained at small p (not the boundary)
    std::vector<long> supp;
    std::vector<std::complex<double>> vals;
    for (long n = 1; n <= 64; ++n) {
        supp.push_back(n);
        vals.push_back({std::pow(0.5, double(n)), 0.0});
    }
    SequenceData c = make_sequence(supp, vals);
    PsiFunction psi = psi_power(1.0);
    auto rep = seq_g_psi_nu(c, psi, 256.0);
    CHECK(rep.value > 0.0);
    CHECK_FALSE(rep.boundary_sup);
}

TEST_CASE("homogeneity") {
    SequenceData c = make_sequence({1, 4, 9}, {{1.0, 2.0}, {0.5, 0.0}, {0.0, -3.0}});
    SequenceData c3 = c;
    for (auto& v : c3.values) v *= 3.0;
    for (double p : {2.0, 5.0}) {
        CHECK(seq_lp(c3, p) == doctest::Approx(3.0 * seq_lp(c, p)).epsilon(1e-12));
        CHECK(seq_lp_nu(c3, p) == doctest::Approx(3.0 * seq_lp_nu(c, p)).epsilon(1e-12));
    }
}
