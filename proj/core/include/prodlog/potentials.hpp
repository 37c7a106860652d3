#pragma once

#include <functional>
#include <string_view>
#include <variant>

namespace prodlog {

/// Particle mass and reduced Planck constant. The defaults make 2m/hbar^2 = 1,
/// so energies and squared wave numbers share units.
struct PhysicsConfig {
    double mass = 0.5;
    double hbar = 1.0;

    /// 2m / hbar^2, the factor multiplying (E - V) in the Schrodinger equation.
    double kinetic_factor() const { return 2.0 * mass / (hbar * hbar); }

    /// Throws DomainError unless mass > 0 and hbar > 0.
    void validate() const;
};

/// V(x) = V0 / (1 + W(exp(-(x - x0)/sigma))). Rises from 0 at x -> -inf to
/// V0 at x -> +inf.
struct LambertBarrier {
    double v0 = 1.0;
    double sigma = 1.0;
    double x0 = 0.0;
};

/// Abrupt step: 0 for x < 0, V0 for x >= 0.
struct StepBarrier {
    double v0 = 1.0;
};

/// V(x) = V0 / (1 + exp(-x/d)).
struct TanhBarrier {
    double v0 = 1.0;
    double d = 1.0;
};

/// Five-parameter barrier in the Lambert coordinate z:
///   V = V0 + V1/(1+z) + V2/(1+z)^2 + V3/(1+z)^3,
/// where V2 is not free: V2 = -V3 + (2m/hbar^2) sigma^2 V3^2. Only under this
/// constraint is the Schrodinger equation solvable by confluent
/// hypergeometric functions.
struct GeneralizedBarrier {
    double v0 = 0.0;
    double v1 = 1.0;
    double v3 = 0.0;
    double sigma = 1.0;
    double x0 = 0.0;

    /// The constrained (1+z)^-2 coefficient.
    double v2(const PhysicsConfig& physics) const;
};

/// V(x) = V0 + V1 / (sqrt(x) (sqrt(x) + z0)), defined for x > 0.
struct SqrtRatioBarrier {
    double v0 = 0.0;
    double v1 = 1.0;
    double z0 = 1.0;
};

using Barrier = std::variant<LambertBarrier, StepBarrier, TanhBarrier, GeneralizedBarrier, SqrtRatioBarrier>;

using PotentialFn = std::function<double(double)>;

namespace potentials {

/// Lambert coordinate z = W(exp(-(x - x0)/sigma)) > 0, strictly decreasing in x.
double z_of_x(double x, double sigma, double x0 = 0.0);

/// ln z for the Lambert coordinate; finite even where z underflows.
double log_z_of_x(double x, double sigma, double x0 = 0.0);

/// dz/dx = -(z/sigma)/(1 + z), expressed through z.
double rho(double z, double sigma);

/// Potential energy of any barrier at position x. SqrtRatio throws
/// DomainError for x <= 0; the others are total.
double evaluate(const Barrier& barrier, double x, const PhysicsConfig& physics = {});

/// Generalized barrier evaluated directly in the Lambert coordinate.
double evaluate_in_z(const GeneralizedBarrier& barrier, double z, const PhysicsConfig& physics = {});

/// Binds a barrier into a callable V(x).
PotentialFn as_function(const Barrier& barrier, const PhysicsConfig& physics = {});

/// Value of V at +inf / -inf (used to derive asymptotic wave numbers).
double right_limit(const Barrier& barrier, const PhysicsConfig& physics = {});
double left_limit(const Barrier& barrier, const PhysicsConfig& physics = {});

/// Length over which the barrier changes appreciably (sigma, d, or 0 for the step).
double length_scale(const Barrier& barrier);

/// Position of the barrier's reference point (x0, or 0).
double origin(const Barrier& barrier);

/// True when V has a jump discontinuity (the abrupt step).
bool is_discontinuous(const Barrier& barrier);

std::string_view kind_name(const Barrier& barrier);

}  // namespace potentials
}  // namespace prodlog
