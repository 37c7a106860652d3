#include "prodlog/wkb.hpp"

#include <cmath>

#include "prodlog/errors.hpp"

namespace prodlog::wkb {

namespace {

double momentum(const PotentialFn& potential, double x, double energy, double factor)
{
    const double kinetic = energy - potential(x);
    if (!(kinetic > 0.0)) throw DomainError("wkb: classically forbidden point inside the matching window");
    return std::sqrt(factor * kinetic);
}

// p + [3/4 (p'/p)^2 - 1/2 p''/p] / (2p): the next WKB order, making
// q^{-1/2} exp(i int q) solve psi'' + p^2 psi = 0 up to O(p'''') terms.
double corrected_momentum(const PotentialFn& potential, double x, double energy, double factor, double d)
{
    const double pm2 = momentum(potential, x - 2 * d, energy, factor);
    const double pm1 = momentum(potential, x - d, energy, factor);
    const double p0 = momentum(potential, x, energy, factor);
    const double pp1 = momentum(potential, x + d, energy, factor);
    const double pp2 = momentum(potential, x + 2 * d, energy, factor);
    const double dp = (-pp2 + 8.0 * pp1 - 8.0 * pm1 + pm2) / (12.0 * d);
    const double d2p = (-pp2 + 16.0 * pp1 - 30.0 * p0 + 16.0 * pm1 - pm2) / (12.0 * d * d);
    const double r = dp / p0;
    return p0 + (0.75 * r * r - 0.5 * d2p / p0) / (2.0 * p0);
}

}  // namespace

LocalWave local_wave(const PotentialFn& potential, double x, double energy, const PhysicsConfig& physics,
                     Matching matching, double fd_step)
{
    const double factor = physics.kinetic_factor();
    if (matching == Matching::plane_wave) return {momentum(potential, x, energy, factor), 0.0};
    const double qp = corrected_momentum(potential, x + fd_step, energy, factor, fd_step);
    const double qm = corrected_momentum(potential, x - fd_step, energy, factor, fd_step);
    return {corrected_momentum(potential, x, energy, factor, fd_step), (qp - qm) / (2.0 * fd_step)};
}

Amplitudes decompose(Complex psi, Complex dpsi, const LocalWave& wave)
{
    const double root = std::sqrt(wave.q);
    const Complex sum = psi * root;
    const Complex diff = (dpsi * root + wave.dq / (2.0 * wave.q) * sum) / (kI * wave.q);
    return {0.5 * (sum + diff), 0.5 * (sum - diff)};
}

}  // namespace prodlog::wkb
