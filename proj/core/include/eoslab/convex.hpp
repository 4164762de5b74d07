#pragma once

/// Convex calculus: Young functions, bracketed concave maximization and the
/// Legendre (Young-Fenchel) transform W*(p) = sup_{z >= lo} (p z - W(z)).

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eoslab {

using ScalarFn = std::function<double(double)>;

/// Result of a one-dimensional concave maximization.
struct MaxResult {
    double argmax = 0.0;
    double value = 0.0;
    bool unbounded = false;  // objective still increasing at the search cap
};

/// Maximizes a concave objective on [lo, inf) by geometric bracket expansion
/// followed by golden-section search. `cap` bounds the bracket expansion;
/// if the objective is still increasing there the result is flagged unbounded.
MaxResult maximize_concave(const ScalarFn& f, double lo, double cap = 1e8,
                           double rel_tol = 1e-13);

/// Convex increasing kernel W on [2, inf) of an exponential Orlicz function.
struct YoungFunction {
    ScalarFn eval;                       // x -> W(x)
    std::optional<ScalarFn> derivative;  // x -> W'(x); finite differences otherwise
    double domain_lo = 2.0;

    double operator()(double x) const { return eval(x); }
    double slope(double x) const;  // derivative if present, else central difference
};

/// W* evaluated lazily; each call runs a fresh bracketed maximization so the
/// object stays immutable and safe to share across threads.
class LegendreTransform {
public:
    LegendreTransform(YoungFunction w, double cap = 1e8);

    MaxResult at(double p) const;
    double operator()(double p) const { return at(p).value; }

    const YoungFunction& young() const { return w_; }

private:
    YoungFunction w_;
    double cap_;
};

/// Tabulation of W* on a grid, with per-point unbounded flags.
struct TabulatedConvex {
    std::vector<double> p;
    std::vector<double> value;
    std::vector<bool> unbounded;
};

/// Legendre transform per grid point. p_grid must be positive increasing.
TabulatedConvex legendre(const YoungFunction& w, double domain_lo,
                         const std::vector<double>& p_grid);

/// Wraps a tabulation back into a YoungFunction (linear interpolation,
/// linear extrapolation from the last segment). Used for the Fenchel-Moreau
/// round trip W** = W.
YoungFunction young_from_table(std::vector<double> x, std::vector<double> value);

/// log-spaced grid of n points on [lo, hi], lo > 0.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// Trend of a positive ratio sampled on an increasing grid; the window
/// conventions follow the artifact-wide classification rules.
enum class Trend { DecaysToZero, BoundedPositive, Grows, Inconclusive };

Trend classify_trend(const std::vector<double>& ratio, std::size_t window = 20);

std::string to_string(Trend t);

}  // namespace eoslab
