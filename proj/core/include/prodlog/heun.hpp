#pragma once

#include <functional>

#include "prodlog/analytic.hpp"
#include "prodlog/potentials.hpp"
#include "prodlog/specfun.hpp"
#include "prodlog/wave.hpp"

namespace prodlog::heun {

/// Parameters of the bi-confluent Heun equation
///   u'' + (gamma/z + delta + eps z) u' + ((alpha z - q)/z) u = 0.
struct BiconfluentParams {
    Complex gamma;
    Complex delta;
    Complex eps;
    Complex alpha;
    Complex q;

    /// Position of the apparent singularity of the derivative equation, q/alpha.
    Complex z0() const;
};

/// Heun parameters that turn the generalized Lambert barrier into the
/// Schrodinger equation (eps = 0, q = -alpha, apparent singularity at z = -1).
struct GeneralizedSolutionParams {
    Complex gamma;
    Complex delta;
    Complex alpha;

    BiconfluentParams biconfluent() const;
};

/// gamma = 2 sigma sqrt(k (-E + V0 + V1 + k sigma^2 V3^2)), principal root,
/// delta = gamma + 2 k sigma^2 V3, alpha = k sigma^2 (V1 + delta V3),
/// with k = 2m/hbar^2. For the pure Lambert barrier gamma = i delta_scatter.
GeneralizedSolutionParams map_params(double energy, const GeneralizedBarrier& barrier,
                                     const PhysicsConfig& physics = {});

/// Regular Frobenius solution at z = 0 (exponent 0, u(0) = 1) and its first
/// three derivatives, summed term by term.
struct SeriesValue {
    Complex u;
    Complex du;
    Complex d2u;
    Complex d3u;
    double truncation = 0.0;  // |last term| / |sum|
};

/// Throws DomainError when gamma is a non-positive integer.
SeriesValue biconfluent_series(const BiconfluentParams& p, Complex z, int terms = 200);

/// |u'' + (gamma/z + delta + eps z) u' + ((alpha z - q)/z) u| over the largest term.
double biconfluent_residual(const BiconfluentParams& p, Complex z, const SeriesValue& v);

/// w = z^gamma e^{delta z + eps z^2/2} u' and dw/dz = -z^gamma e^{...} ((alpha z - q)/z) u.
struct TransformValue {
    Complex w;
    Complex dw;
};

TransformValue w_transform(const BiconfluentParams& p, Complex z, Complex u, Complex du);

/// Residual of
///   w'' - ((gamma-1)/z + delta + eps z + 1/(z - z0)) w' + (alpha (z - z0)/z) w = 0
/// with w, w', w'' built from u..u''' by the product rule (no use of the
/// Heun equation), scaled by the largest term.
double derived_equation_residual(const BiconfluentParams& p, Complex z, const SeriesValue& v);

/// Both sides of the invariant identity at z: the invariant g - f'/2 - f^2/4
/// of the derivative equation, and the Schrodinger side built from
/// rho = dz/dx = -(z/sigma)/(z - z0) and (2m/hbar^2)(E - V(z))/rho^2.
/// gap = |lhs - rhs| divided by the largest of the geometric, energy and
/// potential terms.
struct InvariantMatch {
    Complex lhs;
    Complex rhs;
    double gap = 0.0;
};

InvariantMatch invariant_match(const BiconfluentParams& p, double z, double sigma,
                               const std::function<double(double)>& potential_of_z, double energy,
                               const PhysicsConfig& physics = {});

InvariantMatch invariant_match(const BiconfluentParams& p, double z, const GeneralizedBarrier& barrier,
                               double energy, const PhysicsConfig& physics = {});

/// At eps = 0 the regular Heun solution is u = e^{mu z} M(a; b; lambda z)
/// with lambda = sqrt(delta^2 - 4 alpha) (Im lambda >= 0),
/// mu = -(delta + lambda)/2, a = (q - gamma mu)/lambda, b = gamma.
struct HypergeometricReduction {
    Complex mu;
    Complex lambda;
    Complex a;
    Complex b;

    /// Parameters of the companion solution (lambda z)^{1-b} M(a-b+1; 2-b; lambda z).
    Complex companion_a() const { return a - b + 1.0; }
    Complex companion_b() const { return 2.0 - b; }

    Complex evaluate(Complex z) const;
    Complex derivative(Complex z) const;
};

/// Throws UnsupportedRegimeError for eps != 0 and DomainError for lambda = 0.
HypergeometricReduction reduce_to_hypergeometric(const BiconfluentParams& p);
HypergeometricReduction reduce_to_hypergeometric(const GeneralizedSolutionParams& p);

/// psi = z^{gamma/2} e^{delta z/2} du/dz with u the regular solution, and
/// dpsi/dx, both analytic. z is the Lambert coordinate of the barrier.
WaveValue heun_wavefunction(double x, double energy, const GeneralizedBarrier& barrier,
                            const PhysicsConfig& physics = {});

/// Coefficients (c1, c2) of the Kummer/Tricomi basis that make the closed-form
/// Lambert solution proportional to the regular Heun solution, from
/// M(A;B;w) = G(A-B+1)/G(1-B) U(A;B;w) - G(A-B+1)G(B-1)/(G(1-B)G(A)) w^{1-B} M(A-B+1;2-B;w)
/// with A = i a, B = i delta.
BasisCoefficients lambert_equivalent_coefficients(const ScatterParams& params);

}  // namespace prodlog::heun
