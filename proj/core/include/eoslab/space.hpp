#pragma once

/// Measure spaces (normalized torus, truncated line, nu-weighted line) with
/// their quadrature grids, and complex functions sampled on them.

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace eoslab {

enum class SpaceKind { Torus, Line, LineNu };

/// A quadrature grid on one of the three measure spaces. Nodes avoid the
/// singular endpoints (offset-uniform or geometrically graded cells); weights
/// are plain cell measures, normalized by 2*pi on the torus.
struct SpaceSpec {
    SpaceKind kind = SpaceKind::Torus;
    std::size_t resolution = 0;  // requested node count (power of two)
    bool graded = false;
    double x_max = 0.0;        // half-width, line kinds only
    double grading_floor = 0;  // smallest graded cell boundary

    std::vector<double> nodes;
    std::vector<double> weights;

    double total_measure() const;
    bool uniform() const { return !graded; }

    /// Torus [0, 2*pi] with normalized measure. Uniform grids sit at the
    /// offset nodes 2*pi*(j+1/2)/n (FFT-compatible, singularity-free);
    /// graded grids cluster cells geometrically (ratio 1.1) at both ends
    /// down to `floor` so log-type singularities at 0 resolve.
    static SpaceSpec torus(std::size_t resolution, bool graded = false,
                           double floor = 1e-160);

    /// Symmetric truncated line [-x_max, x_max], Lebesgue measure.
    static SpaceSpec line(double x_max, std::size_t resolution,
                          bool graded = false, double floor = 1e-12);

    /// Same grid as line(), but norms use the nu-weight |x|^(p-2).
    static SpaceSpec line_nu(double x_max, std::size_t resolution,
                             bool graded = false, double floor = 1e-12);
};

/// Sampled complex function; values are finite at every node.
struct GridFunction {
    SpaceSpec space;
    std::vector<std::complex<double>> values;
    std::string meta;

    std::size_t size() const { return values.size(); }
};

/// Pointwise evaluation at the quadrature nodes. Throws if the expression is
/// non-finite at a node, naming it.
GridFunction sample(const std::function<std::complex<double>(double)>& expr,
                    const SpaceSpec& space, std::string meta = "");
GridFunction sample_real(const std::function<double(double)>& expr,
                         const SpaceSpec& space, std::string meta = "");

/// Distribution tail T(|f|, u) = mes{x : |f(x)| > u}.
double tail(const GridFunction& f, double u);

/// Indicator of an interval of measure approximately delta, anchored away
/// from the grading singularities; the attained measure is the weight sum
/// over the selected cells (use attained_measure for exact comparisons).
GridFunction indicator(const SpaceSpec& space, double delta);
double attained_measure(const GridFunction& ind);

/// CSV export/import with columns (node, weight, re, im).
void write_csv(const GridFunction& f, const std::string& path);
GridFunction read_csv(const std::string& path, SpaceKind kind);

}  // namespace eoslab
