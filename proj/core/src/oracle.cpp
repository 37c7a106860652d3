#include "prodlog/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prodlog/errors.hpp"

namespace prodlog::oracle {

namespace {

constexpr std::size_t kMinNodes = 1000;

// Largest power of two not above h. Dyadic spacings keep nodes such as
// x = 0 exact under halving, which matters for the step barrier.
double dyadic_floor(double h) { return std::exp2(std::floor(std::log2(h))); }

struct Match {
    Complex ratio;  // B / A
    double flux_t;  // k_right / |A|^2

    double r() const { return std::norm(ratio); }
};

Match match_left_edge(const Solution& solution, double energy, const PotentialFn& potential,
                      const PhysicsConfig& physics, wkb::Matching matching, double fd_step)
{
    if (solution.samples.empty()) throw MatchingError("oracle: empty solution");
    const Sample& edge = solution.samples.front();
    const auto wave = wkb::local_wave(potential, edge.x, energy, physics, matching, fd_step);
    if (!(wave.q > 1e-8)) throw MatchingError("oracle: local waves nearly parallel at the matching point");
    const auto amp = wkb::decompose(edge.psi, edge.dpsi, wave);
    const double norm_a = std::abs(amp.right_moving);
    if (!(norm_a > 0.0) || !std::isfinite(norm_a)) throw MatchingError("oracle: no incident wave found");
    return {amp.left_moving / amp.right_moving, solution.k_right / (norm_a * norm_a)};
}

}  // namespace

void Grid::validate() const
{
    if (!(x_min < x_max)) throw DomainError("Grid: x_min must be below x_max");
    if (n < kMinNodes) throw DomainError("Grid: at least 1000 nodes required");
}

Grid aligned_grid(double lo, double hi, double anchor, double h)
{
    if (!(h > 0.0) || !(lo < hi)) throw DomainError("aligned_grid: bad extent or spacing");
    const auto n_left = static_cast<long long>(std::ceil((anchor - lo) / h - 1e-9));
    const auto n_right = static_cast<long long>(std::ceil((hi - anchor) / h - 1e-9));
    Grid g;
    g.x_min = anchor - double(n_left) * h;
    g.x_max = anchor + double(n_right) * h;
    g.n = static_cast<std::size_t>(n_left + n_right + 1);
    return g;
}

Solution integrate_schrodinger(const PotentialFn& potential, double energy, const Grid& grid,
                               const PhysicsConfig& physics)
{
    grid.validate();
    physics.validate();
    const std::size_t n = grid.n;
    const double h = grid.step();
    const double h2 = h * h;
    const double factor = physics.kinetic_factor();

    // index j = i + 1 for node i; j = 0 and j = n + 1 are ghost nodes
    std::vector<double> f(n + 2);
    for (std::size_t j = 0; j < n + 2; ++j) {
        const double x = grid.x_min + (double(j) - 1.0) * h;
        const double kinetic = energy - potential(x);
        if (!(kinetic > 0.0))
            throw DomainError("integrate_schrodinger: turning point inside the box at x = " + std::to_string(x));
        f[j] = -factor * kinetic;
    }

    const double k_right = std::sqrt(-f[n]);
    if (k_right * h > 1.0) throw DomainError("integrate_schrodinger: grid too coarse for the local wave number");
    // discrete dispersion of the Numerov recurrence for constant f
    const double cos_theta = (1.0 + 5.0 * h2 * f[n] / 12.0) / (1.0 - h2 * f[n] / 12.0);
    const double theta = std::acos(cos_theta);

    std::vector<Complex> y(n + 2);
    y[n] = std::polar(1.0, k_right * grid.x_max);
    y[n + 1] = y[n] * std::polar(1.0, theta);
    for (std::size_t j = n; j >= 1; --j) {
        y[j - 1] = (2.0 * (1.0 + 5.0 * h2 * f[j] / 12.0) * y[j] - (1.0 - h2 * f[j + 1] / 12.0) * y[j + 1])
                   / (1.0 - h2 * f[j - 1] / 12.0);
    }

    Solution out;
    out.k_right = k_right;
    out.samples.resize(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const Complex dpsi = ((1.0 - h2 * f[j + 1] / 6.0) * y[j + 1] - (1.0 - h2 * f[j - 1] / 6.0) * y[j - 1])
                             / (2.0 * h);
        out.samples[j - 1] = {grid.x_min + (double(j) - 1.0) * h, y[j], dpsi};
    }
    return out;
}

Grid default_grid(const Barrier& barrier, double energy, const PhysicsConfig& physics)
{
    if (std::holds_alternative<SqrtRatioBarrier>(barrier))
        throw DomainError("oracle: the sqrt-ratio barrier has no scattering setup");
    physics.validate();
    const double factor = physics.kinetic_factor();
    const double left = potentials::left_limit(barrier, physics);
    const double right = potentials::right_limit(barrier, physics);
    if (!(energy > left) || !(energy > right))
        throw UnsupportedRegimeError("oracle: energy must exceed the potential at both ends");
    const double k1 = std::sqrt(factor * (energy - left));
    const double k2 = std::sqrt(factor * (energy - right));
    const double k_max = std::max(k1, k2);
    const double scale = potentials::length_scale(barrier);
    const double origin = potentials::origin(barrier);

    double lo = 0.0;
    double hi = 0.0;
    double h = 1.0 / (20.0 * k_max);
    if (std::holds_alternative<StepBarrier>(barrier)) {
        lo = origin - 20.0 / k1 - 1.0;
        hi = origin + 20.0 / k2 + 1.0;
    } else if (std::holds_alternative<TanhBarrier>(barrier)) {
        lo = origin - 40.0 * scale - 20.0 / k1;
        hi = origin + 40.0 * scale + 20.0 / k2;
        h = std::min(h, scale / 50.0);
    } else {
        lo = origin - 200.0 * scale - 20.0 / k1;
        hi = origin + 40.0 * scale + 20.0 / k2;
        h = std::min(h, scale / 50.0);
    }
    h = dyadic_floor(h);
    while ((hi - lo) / h < double(kMinNodes)) h *= 0.5;
    return aligned_grid(lo, hi, origin, h);
}

ReflectionResult extract_reflection(const Solution& solution, double energy, const PotentialFn& potential,
                                    const PhysicsConfig& physics, wkb::Matching matching, double fd_step)
{
    const Match m = match_left_edge(solution, energy, potential, physics, matching, fd_step);
    ReflectionResult out;
    out.r = m.r();
    out.t = 1.0 - out.r;
    out.method = Method::oracle;
    out.diagnostics = {{"flux_t", m.flux_t},
                       {"flux_residual", out.r + m.flux_t - 1.0},
                       {"x_min", solution.samples.front().x}};
    return out;
}

ReflectionResult oracle_reflection(double energy, const Barrier& barrier, const PhysicsConfig& physics,
                                   const OracleConfig& config)
{
    const Grid base = config.grid ? *config.grid : default_grid(barrier, energy, physics);
    base.validate();
    const auto potential = potentials::as_function(barrier, physics);
    const double origin = potentials::origin(barrier);
    const double h = base.step();
    const double left_extent = origin - base.x_min;
    const int rounds = std::max(1, config.rounds);
    const bool discontinuous = potentials::is_discontinuous(barrier);
    const double order = discontinuous ? 2.0 : 4.0;
    const double richardson = std::exp2(order) - 1.0;

    ReflectionResult out;
    out.method = Method::oracle;
    std::vector<double> extents;
    std::vector<double> r_values;
    double flux_t = 0.0;
    double refinement_change = 0.0;

    for (int round = 0; round < rounds; ++round) {
        const double extent = left_extent * std::pow(config.box_growth, round);
        const Grid grid = round == 0 ? base : aligned_grid(origin - extent, base.x_max, origin, h);
        const Match coarse = match_left_edge(integrate_schrodinger(potential, energy, grid, physics), energy,
                                             potential, physics, config.matching, config.fd_step);
        Match best = coarse;
        double r_round = coarse.r();
        if (config.refine_step) {
            const Grid fine{grid.x_min, grid.x_max, 2 * (grid.n - 1) + 1};
            const Match m = match_left_edge(integrate_schrodinger(potential, energy, fine, physics), energy,
                                            potential, physics, config.matching, config.fd_step);
            best.flux_t = m.flux_t + (m.flux_t - coarse.flux_t) / richardson;
            refinement_change = std::abs(m.r() - coarse.r()) / std::max(m.r(), 1e-300);
            if (discontinuous) {
                // the jump adds an O(h) phase error that spoils complex extrapolation
                r_round = m.r() + (m.r() - coarse.r()) / richardson;
            } else {
                // extrapolating B/A keeps tiny reflections accurate
                r_round = std::norm(m.ratio + (m.ratio - coarse.ratio) / richardson);
            }
        }
        extents.push_back(origin - grid.x_min);
        r_values.push_back(r_round);
        flux_t = best.flux_t;
        out.diagnostics["R_round_" + std::to_string(round)] = r_values.back();
    }

    double r = r_values.back();
    if (config.matching == wkb::Matching::plane_wave && r_values.size() >= 2) {
        // plane-wave matching leaves an O(1/L) bias from the Coulomb-like tail
        const double l1 = extents[extents.size() - 2];
        const double l2 = extents.back();
        r = (l2 * r_values.back() - l1 * r_values[r_values.size() - 2]) / (l2 - l1);
    }
    out.r = r;
    out.t = 1.0 - r;
    out.diagnostics["rounds"] = rounds;
    out.diagnostics["step"] = h;
    out.diagnostics["x_min"] = origin - extents.back();
    out.diagnostics["x_max"] = base.x_max;
    out.diagnostics["flux_t"] = flux_t;
    out.diagnostics["flux_residual"] = r_values.back() + flux_t - 1.0;
    out.diagnostics["step_refinement_change"] = refinement_change;
    return out;
}

double schrodinger_residual(const std::function<Complex(double)>& psi, const PotentialFn& potential,
                            double energy, std::span<const double> xs, const PhysicsConfig& physics, double h)
{
    const double factor = physics.kinetic_factor();
    double worst = 0.0;
    for (double x : xs) {
        const Complex p0 = psi(x);
        const Complex d2 = (-psi(x + 2 * h) + 16.0 * psi(x + h) - 30.0 * p0 + 16.0 * psi(x - h) - psi(x - 2 * h))
                           / (12.0 * h * h);
        const double kinetic = factor * (energy - potential(x));
        const double scale = std::abs(kinetic) * std::abs(p0) + std::abs(d2);
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(d2 + kinetic * p0) / scale);
    }
    return worst;
}

double schrodinger_residual(const std::function<Complex(double)>& psi, const PotentialFn& potential,
                            double energy, const Grid& grid, const PhysicsConfig& physics, double h)
{
    grid.validate();
    std::vector<double> xs(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) xs[i] = grid.node(i);
    return schrodinger_residual(psi, potential, energy, xs, physics, h);
}

}  // namespace prodlog::oracle
