#include "eoslab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eoslab/fft.hpp"

namespace eoslab {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cd = std::complex<double>;

bool is_uniform_torus(const SpaceSpec& s) {
    return s.kind == SpaceKind::Torus && !s.graded;
}

}  // namespace

FourierCoeffs coeffs(const GridFunction& f, int m_max) {
    if (f.space.kind != SpaceKind::Torus)
        throw std::invalid_argument("coeffs: torus functions only");
    if (m_max < 0) throw std::invalid_argument("coeffs: m_max must be >= 0");
    FourierCoeffs fc;
    fc.m_max = m_max;
    fc.c.assign(2 * static_cast<std::size_t>(m_max) + 1, cd(0.0, 0.0));
    const std::size_t ng = f.size();

    if (is_uniform_torus(f.space)) {
        if (2 * static_cast<std::size_t>(m_max) + 1 > ng)
            throw std::invalid_argument("coeffs: m_max too large for grid");
        // nodes are x_j = 2 pi (j + 1/2) / ng, so e^{i n x_j} picks up the
        // constant twist e^{i pi n / ng} on top of the plain DFT kernel
        auto bins = fft_backward(f.values);
        for (int n = -m_max; n <= m_max; ++n) {
            std::size_t k = static_cast<std::size_t>(((n % int(ng)) + int(ng)) % int(ng));
            fc.at(n) = bins[k] * std::polar(1.0 / double(ng), kPi * n / double(ng));
        }
        return fc;
    }

    // quadrature sums with a per-node phase recurrence, O(ng * m_max)
    for (std::size_t j = 0; j < ng; ++j) {
        cd base = f.values[j] * f.space.weights[j];
        cd e = std::polar(1.0, f.space.nodes[j]);
        cd pos = base, neg = base;
        fc.at(0) += base;
        for (int n = 1; n <= m_max; ++n) {
            pos *= e;
            neg *= std::conj(e);
            fc.at(n) += pos;
            fc.at(-n) += neg;
        }
    }
    return fc;
}

std::vector<GridFunction> partial_sum_snapshots(const FourierCoeffs& fc,
                                                const SpaceSpec& space,
                                                const std::vector<int>& checkpoints) {
    if (checkpoints.empty()) return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("partial_sum_snapshots: checkpoints must increase");
    if (checkpoints.back() > fc.m_max)
        throw std::invalid_argument("partial_sum_snapshots: checkpoint beyond m_max");

    std::vector<GridFunction> out;
    out.reserve(checkpoints.size());

    // On a uniform grid the sum is evaluated exactly by folding every
    // frequency into its residue bin (the per-frequency phase keeps the true
    // n), so cutoffs beyond the grid resolution are still exact at the nodes.
    if (is_uniform_torus(space)) {
        const std::size_t ng = space.resolution;
        for (int m : checkpoints) {
            std::vector<cd> bins(ng, cd(0.0, 0.0));
            for (int n = -m; n <= m; ++n) {
                std::size_t k =
                    static_cast<std::size_t>(((n % int(ng)) + int(ng)) % int(ng));
                bins[k] += fc.at(n) * std::polar(1.0, -kPi * n / double(ng));
            }
            GridFunction g;
            g.space = space;
            g.values = fft_forward(bins);
            out.push_back(std::move(g));
        }
        return out;
    }

    // one pass over nodes, extending the sum term by term and recording it at
    // each checkpoint; e^{-i(n+1)x} = e^{-inx} * e^{-ix} per node
    const std::size_t ng = space.nodes.size();
    std::vector<std::vector<cd>> snaps(checkpoints.size(),
                                       std::vector<cd>(ng, cd(0.0, 0.0)));
    for (std::size_t j = 0; j < ng; ++j) {
        cd em = std::polar(1.0, -space.nodes[j]);
        cd pos(1.0, 0.0), neg(1.0, 0.0);
        cd sum = fc.at(0);
        std::size_t next = 0;
        while (next < checkpoints.size() && checkpoints[next] == 0)
            snaps[next++][j] = sum;
        for (int n = 1; n <= checkpoints.back(); ++n) {
            pos *= em;
            neg *= std::conj(em);
            sum += fc.at(n) * pos + fc.at(-n) * neg;
            while (next < checkpoints.size() && checkpoints[next] == n)
                snaps[next++][j] = sum;
        }
    }
    for (auto& s : snaps) {
        GridFunction g;
        g.space = space;
        g.values = std::move(s);
        out.push_back(std::move(g));
    }
    return out;
}

GridFunction partial_sum(const FourierCoeffs& fc, const SpaceSpec& space, int m) {
    return partial_sum_snapshots(fc, space, {m}).front();
}

FourierCoeffs hilbert(const FourierCoeffs& fc) {
    FourierCoeffs out = fc;
    for (int n = -fc.m_max; n <= fc.m_max; ++n) {
        double s = n > 0 ? 1.0 : (n < 0 ? -1.0 : 0.0);
        out.at(n) = cd(0.0, s) * fc.at(n);
    }
    return out;
}

LineTransform line_transform(const GridFunction& f) {
    if (f.space.kind == SpaceKind::Torus)
        throw std::invalid_argument("line_transform: line functions only");
    const std::size_t n = f.size();
    LineTransform ft;
    ft.dt = kPi / f.space.x_max;
    ft.t.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        ft.t[k] = (double(k) + 0.5 - 0.5 * double(n)) * ft.dt;

    double vmax = 0.0, edge = 0.0;
    std::size_t rim = std::max<std::size_t>(1, n / 100);
    for (std::size_t j = 0; j < n; ++j) {
        double a = std::abs(f.values[j]);
        vmax = std::max(vmax, a);
        if (j < rim || j + rim >= n) edge = std::max(edge, a);
    }
    ft.boundary_warning = vmax > 0.0 && edge > 1e-6 * vmax;

    if (f.space.uniform()) {
        // x_j = J h, t_k = K dt with J = j+1/2-n/2, K = k+1/2-n/2 and
        // h dt = 2 pi / n, so the kernel factors into a DFT plus twiddles
        const double h = 2.0 * f.space.x_max / double(n);
        const double s = 0.5 - 0.5 * double(n);
        auto tw = [&](double m) { return std::polar(1.0, 2.0 * kPi * s * m / double(n)); };
        std::vector<cd> in(n);
        for (std::size_t j = 0; j < n; ++j) in[j] = f.values[j] * tw(double(j));
        auto bins = fft_backward(in);
        cd c0 = std::polar(h, 2.0 * kPi * s * s / double(n));
        ft.values.resize(n);
        for (std::size_t k = 0; k < n; ++k) ft.values[k] = c0 * tw(double(k)) * bins[k];
        return ft;
    }

    // direct quadrature; the t grid is uniform, so per node a single phase
    // recurrence covers all frequencies
    ft.values.assign(n, cd(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        cd base = f.values[j] * f.space.weights[j];
        cd phase = std::polar(1.0, ft.t[0] * f.space.nodes[j]);
        cd step = std::polar(1.0, ft.dt * f.space.nodes[j]);
        for (std::size_t k = 0; k < n; ++k) {
            ft.values[k] += base * phase;
            phase *= step;
        }
    }
    return ft;
}

GridFunction band_limit(const LineTransform& ft, const SpaceSpec& space,
                        double t_cut) {
    if (space.kind == SpaceKind::Torus)
        throw std::invalid_argument("band_limit: line spaces only");
    const std::size_t n = ft.t.size();
    std::vector<cd> masked(n);
    for (std::size_t k = 0; k < n; ++k)
        masked[k] = std::abs(ft.t[k]) <= t_cut ? ft.values[k] : cd(0.0, 0.0);

    GridFunction g;
    g.space = space;
    const std::size_t m = space.nodes.size();
    g.values.assign(m, cd(0.0, 0.0));

    if (space.uniform() && m == n) {
        const double s = 0.5 - 0.5 * double(n);
        auto tw = [&](double q) { return std::polar(1.0, -2.0 * kPi * s * q / double(n)); };
        std::vector<cd> in(n);
        for (std::size_t k = 0; k < n; ++k) in[k] = masked[k] * tw(double(k));
        auto bins = fft_forward(in);
        cd c0 = std::polar(ft.dt / (2.0 * kPi), -2.0 * kPi * s * s / double(n));
        for (std::size_t j = 0; j < n; ++j) g.values[j] = c0 * tw(double(j)) * bins[j];
        return g;
    }

    for (std::size_t j = 0; j < m; ++j) {
        cd phase = std::polar(1.0, -ft.t[0] * space.nodes[j]);
        cd step = std::polar(1.0, -ft.dt * space.nodes[j]);
        cd acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            acc += masked[k] * phase;
            phase *= step;
        }
        g.values[j] = acc * (ft.dt / (2.0 * kPi));
    }
    return g;
}

GridFunction haar_partial(const GridFunction& f, int m) {
    const std::size_t n = f.size();
    if (!is_uniform_torus(f.space) || (n & (n - 1)) != 0)
        throw std::invalid_argument(
            "haar_partial: uniform power-of-two torus grid required");
    if (m < 1) throw std::invalid_argument("haar_partial: m must be >= 1");
    if (static_cast<std::size_t>(m) > n)
        throw std::invalid_argument("haar_partial: m exceeds grid resolution");

    // the grid maps to the unit interval via u = x / 2pi; the offset nodes
    // u_j = (j + 1/2)/n never sit on a dyadic breakpoint
    auto basis_at = [&](int idx, std::size_t j) -> double {
        if (idx == 1) return 1.0;
        int i = idx - 2;
        int level = 0;
        while ((2 << level) <= i + 1) ++level;  // level = floor(log2(i+1))
        int shift = i + 1 - (1 << level);
        double u = (double(j) + 0.5) / double(n);
        double scaled = u * double(1 << level) - double(shift);
        if (scaled < 0.0 || scaled >= 1.0) return 0.0;
        return (scaled < 0.5 ? 1.0 : -1.0) * std::pow(2.0, 0.5 * level);
    };

    GridFunction g;
    g.space = f.space;
    g.values.assign(n, cd(0.0, 0.0));
    for (int idx = 1; idx <= m; ++idx) {
        cd coef(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            coef += f.values[j] * basis_at(idx, j) * f.space.weights[j];
        for (std::size_t j = 0; j < n; ++j)
            g.values[j] += coef * basis_at(idx, j);
    }
    return g;
}

bool detect_floor(const std::vector<double>& trace) {
    if (trace.size() < 8) return false;
    std::size_t q = trace.size() / 4;
    std::vector<double> head(trace.begin(), trace.begin() + q);
    std::sort(head.begin(), head.end());
    double head_median = head[q / 2];
    double tail_min = *std::min_element(trace.end() - q, trace.end());
    return tail_min >= 0.5 * head_median;
}

}  // namespace eoslab
