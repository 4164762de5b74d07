#include "eoslab/convex.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace eoslab {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("log_grid: need 0 < lo < hi, n >= 2");
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * double(i) / double(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

MaxResult maximize_concave(const ScalarFn& f, double lo, double cap, double rel_tol) {
    MaxResult r;
    double a = lo;
    double fa = f(a);
    // Expand the bracket geometrically until the objective turns down.
    double step = std::max(1.0, std::abs(lo)) * 0.5;
    double prev_x = a, prev_f = fa;
    double b = a;
    bool turned = false;
    while (prev_x < cap) {
        double x = std::min(prev_x + step, cap);
        double fx = f(x);
        if (fx < prev_f) {
            b = x;
            turned = true;
            break;
        }
        prev_x = x;
        prev_f = fx;
        step *= 2.0;
    }
    if (!turned) {
        r.argmax = prev_x;
        r.value = prev_f;
        r.unbounded = true;
        return r;
    }
    // Golden-section search on [a, b]; concavity makes the objective unimodal.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const double tol = rel_tol * std::max(1.0, std::abs(b));
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    r.argmax = 0.5 * (a + b);
    r.value = f(r.argmax);
    // The domain endpoint can beat the interior point when the max sits at lo.
    if (fa > r.value) {
        r.argmax = lo;
        r.value = fa;
    }
    return r;
}

double YoungFunction::slope(double x) const {
    if (derivative) return (*derivative)(x);
    const double h = std::max(1e-6, 1e-6 * std::abs(x));
    if (x - h < domain_lo) return (eval(x + h) - eval(x)) / h;
    return (eval(x + h) - eval(x - h)) / (2.0 * h);
}

LegendreTransform::LegendreTransform(YoungFunction w, double cap)
    : w_(std::move(w)), cap_(cap) {}

MaxResult LegendreTransform::at(double p) const {
    const auto& w = w_;
    return maximize_concave([&w, p](double z) { return p * z - w.eval(z); },
                            w_.domain_lo, cap_);
}

TabulatedConvex legendre(const YoungFunction& w, double domain_lo,
                         const std::vector<double>& p_grid) {
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] > 0.0) || (i > 0 && !(p_grid[i] > p_grid[i - 1])))
            throw std::invalid_argument("legendre: p_grid must be positive increasing");
    }
    YoungFunction w2 = w;
    w2.domain_lo = domain_lo;
    LegendreTransform lt(w2);
    TabulatedConvex out;
    out.p = p_grid;
    out.value.resize(p_grid.size());
    out.unbounded.resize(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        MaxResult r = lt.at(p_grid[i]);
        out.value[i] = r.value;
        out.unbounded[i] = r.unbounded;
    }
    return out;
}

YoungFunction young_from_table(std::vector<double> x, std::vector<double> value) {
    if (x.size() != value.size() || x.size() < 2)
        throw std::invalid_argument("young_from_table: need matching arrays, size >= 2");
    auto xs = std::make_shared<std::vector<double>>(std::move(x));
    auto vs = std::make_shared<std::vector<double>>(std::move(value));
    YoungFunction w;
    w.domain_lo = xs->front();
    w.eval = [xs, vs](double t) {
        const auto& X = *xs;
        const auto& V = *vs;
        if (t <= X.front()) return V.front();
        std::size_t hi = std::upper_bound(X.begin(), X.end(), t) - X.begin();
        if (hi >= X.size()) hi = X.size() - 1;  // extrapolate from last segment
        std::size_t lo = hi - 1;
        double s = (V[hi] - V[lo]) / (X[hi] - X[lo]);
        return V[lo] + s * (t - X[lo]);
    };
    return w;
}

Trend classify_trend(const std::vector<double>& ratio, std::size_t window) {
    if (ratio.size() < 4) return Trend::Inconclusive;
    const std::size_t n = ratio.size();
    const std::size_t w = std::min(window, n);
    for (double v : ratio)
        if (!std::isfinite(v) || v < 0.0) return Trend::Inconclusive;

    const double first = ratio[n - w];
    const double last = ratio[n - 1];
    bool noninc = true, nondec = true;
    for (std::size_t i = n - w + 1; i < n; ++i) {
        if (ratio[i] > ratio[i - 1] * (1.0 + 1e-9)) noninc = false;
        if (ratio[i] < ratio[i - 1] * (1.0 - 1e-9)) nondec = false;
    }
    if (noninc && (last <= 1e-3 || (first > 0.0 && last <= 0.92 * first)))
        return Trend::DecaysToZero;
    if (nondec && first > 0.0 && last >= 1.08 * first) return Trend::Grows;
    double mn = ratio[n - w], mx = ratio[n - w];
    for (std::size_t i = n - w; i < n; ++i) {
        mn = std::min(mn, ratio[i]);
        mx = std::max(mx, ratio[i]);
    }
    if (mx > 0.0 && (mx - mn) <= 0.05 * mx && last > 1e-3) return Trend::BoundedPositive;
    return Trend::Inconclusive;
}

std::string to_string(Trend t) {
    switch (t) {
        case Trend::DecaysToZero: return "decays-to-zero";
        case Trend::BoundedPositive: return "bounded-positive";
        case Trend::Grows: return "grows";
        default: return "inconclusive";
    }
}

}  // namespace eoslab
