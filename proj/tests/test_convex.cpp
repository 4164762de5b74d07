#include <doctest.h>

#include <cmath>

#include "eoslab/convex.hpp"

using namespace eoslab;

TEST_CASE("legendre transform of quadratic kernel") {
    // W(z) = z^2/2 on [2, inf): sup(pz - z^2/2) at z = p for p >= 2,
    // so W*(p) = p^2 / 2 there.
    YoungFunction w{[](double z) { return 0.5 * z * z; },
                    [](double z) { return z; }, 2.0};
    LegendreTransform lt(w);
    CHECK(lt(4.0) == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(lt(10.0) == doctest::Approx(50.0).epsilon(1e-10));
    CHECK(lt.at(6.0).argmax == doctest::Approx(6.0).epsilon(1e-8));
    // below the corner the maximizer pins at the domain edge z = 2
    CHECK(lt(1.0) == doctest::Approx(1.0 * 2.0 - 2.0).epsilon(1e-10));
}

TEST_CASE("legendre transform of exponential kernel") {
    // W(z) = e^z: sup(pz - e^z) at z = log p, W*(p) = p log p - p.
    YoungFunction w{[](double z) { return std::exp(z); }, std::nullopt, 2.0};
    LegendreTransform lt(w);
    double p = std::exp(3.0);
    CHECK(lt(p) == doctest::Approx(2.0 * std::exp(3.0)).epsilon(1e-8));
    CHECK(lt(100.0) == doctest::Approx(100.0 * std::log(100.0) - 100.0).epsilon(1e-8));
}

TEST_CASE("fenchel-moreau round trip") {
    YoungFunction w{[](double z) { return 0.5 * z * z; }, std::nullopt, 2.0};
    auto pg = log_grid(2.0, 200.0, 2000);
    TabulatedConvex star = legendre(w, 2.0, pg);
    YoungFunction wstar = young_from_table(star.p, star.value);
    LegendreTransform back(wstar);
    // W**(z) = W(z) on the region where the first transform is interior;
    // the piecewise-linear tabulation undershoots by O(grid-step^2)
    for (double z : {3.0, 5.0, 9.0, 20.0}) {
        CHECK(back(z) == doctest::Approx(0.5 * z * z).epsilon(1e-5));
    }
}

TEST_CASE("order reversal") {
    // W1 <= W2 pointwise implies W1* >= W2*.
    YoungFunction w1{[](double z) { return z * z; }, std::nullopt, 2.0};
    YoungFunction w2{[](double z) { return z * z + z; }, std::nullopt, 2.0};
    LegendreTransform l1(w1), l2(w2);
    for (double p : {5.0, 10.0, 40.0, 100.0}) CHECK(l1(p) >= l2(p));
}

TEST_CASE("unbounded detection") {
    // W(z) = z: sup(pz - z) unbounded for p > 1.
    YoungFunction w{[](double z) { return z; }, std::nullopt, 2.0};
    LegendreTransform lt(w, 1e6);
    CHECK(lt.at(2.0).unbounded);
    CHECK_FALSE(lt.at(0.5).unbounded);
}

TEST_CASE("trend classification") {
    std::vector<double> decay, grow, flat;
    for (int i = 0; i < 60; ++i) {
        decay.push_back(1.0 / (1.0 + i));
        grow.push_back(1.0 + 0.1 * i);
        flat.push_back(2.0 + 1e-6 * std::sin(i));
    }
    CHECK(classify_trend(decay) == Trend::DecaysToZero);
    CHECK(classify_trend(grow) == Trend::Grows);
    CHECK(classify_trend(flat) == Trend::BoundedPositive);
}

TEST_CASE("slow logarithmic decay still classifies as decaying") {
    // ratio ~ 1 / log p sampled on a log grid: strictly decreasing but far
    // from zero at the end of the window
    std::vector<double> r;
    for (double p : log_grid(2.0, 1e6, 60)) r.push_back(1.0 / std::log(p));
    CHECK(classify_trend(r) == Trend::DecaysToZero);
}
