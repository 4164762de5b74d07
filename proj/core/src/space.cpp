#include "eoslab/space.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eoslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool power_of_two(std::size_t n) { return n >= 16 && (n & (n - 1)) == 0; }

/// Cell boundaries on [0, half] : a sliver [0, floor], geometric cells of
/// ratio 1.1 until their width reaches the uniform width of the remainder,
/// then uniform cells. Exactly n_cells cells, last boundary == half.
std::vector<double> graded_half_boundaries(double half, double floor,
                                           std::size_t n_cells) {
    if (!(floor > 0.0) || !(floor < half))
        throw std::invalid_argument("grading floor out of range");
    constexpr double ratio = 1.1;
    // Keep at least half the cells for the uniform bulk: a deep floor on a
    // small grid would otherwise spend every cell on the geometric region
    // and leave the bulk quadrature unusable.
    double budget_floor = half * std::pow(ratio, -double(n_cells) / 2.0);
    floor = std::max(floor, budget_floor);
    std::vector<double> b{0.0, floor};
    while (b.size() - 1 < n_cells - 1) {
        double last = b.back();
        double next = last * ratio;
        std::size_t remaining = n_cells - (b.size() - 1);
        double uniform_w = (half - last) / double(remaining);
        if (next - last >= uniform_w || next >= half) break;
        b.push_back(next);
    }
    std::size_t remaining = n_cells - (b.size() - 1);
    double start = b.back();
    for (std::size_t i = 1; i <= remaining; ++i)
        b.push_back(start + (half - start) * double(i) / double(remaining));
    b.back() = half;
    return b;
}

void append_cells(SpaceSpec& s, const std::vector<double>& b, double offset,
                  double sign, double weight_scale) {
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        double lo = offset + sign * b[i];
        double hi = offset + sign * b[i + 1];
        s.nodes.push_back(0.5 * (lo + hi));
        s.weights.push_back(std::abs(hi - lo) * weight_scale);
    }
}

}  // namespace

double SpaceSpec::total_measure() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

SpaceSpec SpaceSpec::torus(std::size_t resolution, bool graded, double floor) {
    if (!power_of_two(resolution))
        throw std::invalid_argument("torus: resolution must be a power of two >= 16");
    SpaceSpec s;
    s.kind = SpaceKind::Torus;
    s.resolution = resolution;
    s.graded = graded;
    s.grading_floor = graded ? floor : 0.0;
    if (!graded) {
        s.nodes.resize(resolution);
        s.weights.assign(resolution, 1.0 / double(resolution));
        for (std::size_t j = 0; j < resolution; ++j)
            s.nodes[j] = kTwoPi * (double(j) + 0.5) / double(resolution);
    } else {
        auto b = graded_half_boundaries(std::numbers::pi, floor, resolution / 2);
        append_cells(s, b, 0.0, 1.0, 1.0 / kTwoPi);           // [0, pi]
        // Near 2 pi only offsets down to ~2 pi * eps are representable, so
        // the mirrored half grades to a shallower floor.
        auto b2 = graded_half_boundaries(std::numbers::pi, std::max(floor, 1e-9),
                                         resolution / 2);
        std::vector<double> rb(b2.rbegin(), b2.rend());        // [pi, 2 pi] mirrored
        for (std::size_t i = 0; i + 1 < rb.size(); ++i) {
            double lo = kTwoPi - rb[i];
            double hi = kTwoPi - rb[i + 1];
            s.nodes.push_back(0.5 * (lo + hi));
            s.weights.push_back((hi - lo) / kTwoPi);
        }
    }
    return s;
}

SpaceSpec SpaceSpec::line(double x_max, std::size_t resolution, bool graded,
                          double floor) {
    if (!(x_max > 0.0)) throw std::invalid_argument("line: x_max must be positive");
    if (!power_of_two(resolution))
        throw std::invalid_argument("line: resolution must be a power of two >= 16");
    SpaceSpec s;
    s.kind = SpaceKind::Line;
    s.resolution = resolution;
    s.graded = graded;
    s.x_max = x_max;
    s.grading_floor = graded ? floor : 0.0;
    if (!graded) {
        const double dx = 2.0 * x_max / double(resolution);
        s.nodes.resize(resolution);
        s.weights.assign(resolution, dx);
        for (std::size_t j = 0; j < resolution; ++j)
            s.nodes[j] = -x_max + dx * (double(j) + 0.5);
    } else {
        // log-spaced cells per side: resolves both x -> 0 singularities and
        // slow power decay toward the truncation boundary
        std::size_t half = resolution / 2;
        std::vector<double> b(half + 1);
        b[0] = 0.0;
        const double lr = std::log(x_max / floor);
        for (std::size_t i = 1; i <= half; ++i)
            b[i] = floor * std::exp(lr * double(i - 1) / double(half - 1));
        b[half] = x_max;
        std::vector<double> rb(b.rbegin(), b.rend());
        append_cells(s, rb, 0.0, -1.0, 1.0);  // negative side, outermost first
        append_cells(s, b, 0.0, 1.0, 1.0);    // positive side
    }
    return s;
}

SpaceSpec SpaceSpec::line_nu(double x_max, std::size_t resolution, bool graded,
                             double floor) {
    SpaceSpec s = line(x_max, resolution, graded, floor);
    s.kind = SpaceKind::LineNu;
    return s;
}

GridFunction sample(const std::function<std::complex<double>(double)>& expr,
                    const SpaceSpec& space, std::string meta) {
    GridFunction f;
    f.space = space;
    f.meta = std::move(meta);
    f.values.resize(space.nodes.size());
    for (std::size_t i = 0; i < space.nodes.size(); ++i) {
        std::complex<double> v = expr(space.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream oss;
            oss << "sample: non-finite value at node " << i << " (x = "
                << space.nodes[i] << ")";
            throw std::runtime_error(oss.str());
        }
        f.values[i] = v;
    }
    return f;
}

GridFunction sample_real(const std::function<double(double)>& expr,
                         const SpaceSpec& space, std::string meta) {
    return sample([&expr](double x) { return std::complex<double>(expr(x), 0.0); },
                  space, std::move(meta));
}

double tail(const GridFunction& f, double u) {
    if (!(u > 0.0)) throw std::invalid_argument("tail: u must be positive");
    double t = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (std::abs(f.values[i]) > u) t += f.space.weights[i];
    return t;
}

GridFunction indicator(const SpaceSpec& space, double delta) {
    const double total = space.total_measure();
    if (!(delta > 0.0) || delta > total)
        throw std::invalid_argument("indicator: delta exceeds available measure");
    // anchor: node nearest the regular point (pi on the torus, 1 on the line)
    const double anchor = (space.kind == SpaceKind::Torus) ? std::numbers::pi : 1.0;
    std::size_t c = 0;
    for (std::size_t i = 1; i < space.nodes.size(); ++i)
        if (std::abs(space.nodes[i] - anchor) < std::abs(space.nodes[c] - anchor)) c = i;

    GridFunction f;
    f.space = space;
    f.meta = "indicator";
    f.values.assign(space.nodes.size(), 0.0);
    double sum = space.weights[c];
    f.values[c] = 1.0;
    std::size_t lo = c, hi = c;
    bool to_right = true;
    while (true) {
        // grow the contiguous run, preferring the side away from grid ends
        std::size_t cand;
        if (to_right && hi + 1 < space.nodes.size()) cand = hi + 1;
        else if (lo > 0) cand = lo - 1;
        else if (hi + 1 < space.nodes.size()) cand = hi + 1;
        else break;
        double w = space.weights[cand];
        if (std::abs(sum + w - delta) >= std::abs(sum - delta)) break;
        sum += w;
        f.values[cand] = 1.0;
        if (cand == hi + 1) hi = cand; else lo = cand;
        to_right = !to_right;
    }
    return f;
}

double attained_measure(const GridFunction& ind) {
    double s = 0.0;
    for (std::size_t i = 0; i < ind.values.size(); ++i)
        if (std::abs(ind.values[i]) > 0.5) s += ind.space.weights[i];
    return s;
}

void write_csv(const GridFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out.precision(17);
    out << "node,weight,re,im\n";
    for (std::size_t i = 0; i < f.values.size(); ++i)
        out << f.space.nodes[i] << ',' << f.space.weights[i] << ','
            << f.values[i].real() << ',' << f.values[i].imag() << '\n';
}

GridFunction read_csv(const std::string& path, SpaceKind kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    GridFunction f;
    f.space.kind = kind;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double node, weight, re, im;
        char comma;
        ss >> node >> comma >> weight >> comma >> re >> comma >> im;
        f.space.nodes.push_back(node);
        f.space.weights.push_back(weight);
        f.values.emplace_back(re, im);
    }
    f.space.resolution = f.values.size();
    return f;
}

}  // namespace eoslab
