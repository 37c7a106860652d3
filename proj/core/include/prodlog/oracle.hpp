#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "prodlog/analytic.hpp"
#include "prodlog/potentials.hpp"
#include "prodlog/specfun.hpp"
#include "prodlog/wkb.hpp"

namespace prodlog::oracle {

/// Uniform grid x_i = x_min + i h, h = (x_max - x_min)/(n - 1).
struct Grid {
    double x_min = -1.0;
    double x_max = 1.0;
    std::size_t n = 1000;

    double step() const { return (x_max - x_min) / double(n - 1); }
    double node(std::size_t i) const { return x_min + double(i) * step(); }

    /// Throws DomainError unless x_min < x_max and n >= 1000.
    void validate() const;
};

/// Grid with spacing h that has `anchor` as a node and covers [lo, hi].
Grid aligned_grid(double lo, double hi, double anchor, double h);

struct Sample {
    double x;
    Complex psi;
    Complex dpsi;
};

struct Solution {
    std::vector<Sample> samples;
    double k_right = 0.0;  // wave number of the unit boundary wave at x_max
};

/// Backward Numerov integration of psi'' = -(2m/hbar^2)(E - V) psi from a
/// unit right-going wave at x_max. psi' comes from the fourth-order formula
/// consistent with the Numerov recurrence. Throws DomainError if E <= V at
/// any node or the grid is too coarse for the local wave number.
Solution integrate_schrodinger(const PotentialFn& potential, double energy, const Grid& grid,
                               const PhysicsConfig& physics = {});

struct OracleConfig {
    std::optional<Grid> grid;  // default box when empty
    double box_growth = 1.5;   // left extent multiplier per round
    int rounds = 3;
    wkb::Matching matching = wkb::Matching::wkb_phase;
    bool refine_step = true;   // Richardson over h and h/2
    double fd_step = 1e-2;
};

/// Box [x0 - 200 L - 20/k1, x0 + 40 L + 20/k2] with h <= min(1/(20 k), L/50),
/// L the barrier's length scale. Tanh and step barriers use shorter left
/// extents because their tails decay exponentially.
Grid default_grid(const Barrier& barrier, double energy, const PhysicsConfig& physics = {});

/// Splits the solution at its left edge into incident and reflected waves.
ReflectionResult extract_reflection(const Solution& solution, double energy, const PotentialFn& potential,
                                    const PhysicsConfig& physics = {},
                                    wkb::Matching matching = wkb::Matching::wkb_phase, double fd_step = 1e-2);

/// Full oracle: rounds of growing boxes, each Richardson-extrapolated in the
/// step size (order 4, or 2 for a discontinuous barrier).
ReflectionResult oracle_reflection(double energy, const Barrier& barrier, const PhysicsConfig& physics = {},
                                   const OracleConfig& config = {});

/// max |psi'' + (2m/hbar^2)(E - V) psi| / ((2m/hbar^2)|E - V||psi| + |psi''|)
/// over the points, psi'' from a five-point stencil with spacing h.
double schrodinger_residual(const std::function<Complex(double)>& psi, const PotentialFn& potential,
                            double energy, std::span<const double> xs, const PhysicsConfig& physics = {},
                            double h = 1e-3);

double schrodinger_residual(const std::function<Complex(double)>& psi, const PotentialFn& potential,
                            double energy, const Grid& grid, const PhysicsConfig& physics = {}, double h = 1e-3);

}  // namespace prodlog::oracle
