#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "prodlog/potentials.hpp"
#include "prodlog/specfun.hpp"
#include "prodlog/wave.hpp"
#include "prodlog/wkb.hpp"

namespace prodlog {

/// Asymptotic wave numbers on the low side (k1) and high side (k2) of a
/// barrier of height V0. Below threshold k2 is i*kappa.
struct WaveNumbers {
    double k1 = 0.0;
    Complex k2;

    bool above_threshold() const { return k2.imag() == 0.0 && k2.real() >= 0.0; }
};

WaveNumbers wave_numbers(double energy, double v0, const PhysicsConfig& physics = {});

/// Dimensionless parameters of the scaled confluent hypergeometric equation
///   u'' + (i delta / z - i s) u' + (a s / z) u = 0
/// for the Lambert barrier: s = 2 sigma k1, delta = 2 sigma k2 and
/// a = (s + delta)^2 / (4 s).
struct ScatterParams {
    double s = 0.0;
    Complex delta;
    Complex a;

    bool above_threshold() const { return delta.imag() == 0.0 && delta.real() >= 0.0; }
};

/// Throws DomainError for energy <= 0. Below threshold delta and a come back
/// complex; the reflection routines then refuse them.
ScatterParams scatter_params(double energy, const LambertBarrier& barrier, const PhysicsConfig& physics = {});

/// Coefficients of the two fundamental solutions: c1 multiplies the Kummer
/// (left-to-right) member, c2 the Tricomi member, a single right-moving wave
/// on the left (the time reverse of right-to-left scattering).
struct BasisCoefficients {
    Complex c1{1.0, 0.0};
    Complex c2{0.0, 0.0};

    /// Throws DomainError when both coefficients vanish.
    void validate() const;
};

enum class Method { closed_form, wavenumber_form, oracle, step, tanh };

std::string_view method_name(Method method);

struct ReflectionResult {
    double r = 0.0;
    double t = 1.0;
    Method method = Method::closed_form;
    std::map<std::string, double> diagnostics;
};

/// R = [a e^{-pi delta}/(a - delta)] [(s - delta)^2/(s + delta)^2]
///     sinh(pi (a - delta)) / sinh(pi a), evaluated in log space.
ReflectionResult reflection_closed_form(const ScatterParams& params);

/// R = e^{-2 pi sigma k2} sinh(pi sigma (k1-k2)^2 / (2 k1)) / sinh(pi sigma (k1+k2)^2 / (2 k1)).
ReflectionResult reflection_wavenumbers(const WaveNumbers& k, double sigma);

/// Abrupt step: ((k1 - k2)/(k1 + k2))^2.
ReflectionResult reflection_step(const WaveNumbers& k);

/// V0/(1 + e^{-x/d}): sinh^2(pi d (k1-k2)) / sinh^2(pi d (k1+k2)).
ReflectionResult reflection_tanh(const WaveNumbers& k, double d);

/// First-order small-sigma form R_step (1 - 2 pi sigma k2).
double small_sigma_expansion(const WaveNumbers& k, double sigma);

/// ln sinh(x) for x >= 0 without overflow.
double log_sinh(double x);

/// u, du/dz and d2u/dz2 of one fundamental solution.
struct Jet2 {
    Complex value;
    Complex d1;
    Complex d2;
};

enum class BasisMember {
    kummer,   // (i s z)^{1 - i delta} M(1 + i(a - delta); 2 - i delta; i s z)
    tricomi,  // U(i a; i delta; i s z)
};

/// Evaluates a basis member with derivatives from the contiguous relations
/// M' = (A/B) M(A+1; B+1) and U' = -A U(A+1; B+1).
Jet2 hypergeometric_basis(const ScatterParams& params, BasisMember member, double z);

/// |u'' + (i delta/z - i s) u' + (a s/z) u| divided by the largest of the
/// three terms; 0 when u vanishes identically.
double hypergeom_ode_residual(const std::function<Jet2(double)>& u, const ScatterParams& params, double z);

/// Exact solution psi(x) for the Lambert barrier with precomputed parameters.
/// Construct once, evaluate at many x.
class LambertSolution {
public:
    LambertSolution(double energy, const LambertBarrier& barrier, const BasisCoefficients& coeffs,
                    const PhysicsConfig& physics = {});

    WaveValue operator()(double x) const;

    const ScatterParams& params() const { return params_; }

private:
    LambertBarrier barrier_;
    BasisCoefficients coeffs_;
    ScatterParams params_;
    Complex big_a_;   // i a
    Complex big_b_;   // i delta
    Complex kummer_a_;  // 1 + i(a - delta)
    Complex kummer_b_;  // 2 - i delta
};

/// psi and dpsi/dx at x, the derivative computed analytically.
WaveValue wavefunction(double x, double energy, const LambertBarrier& barrier, const BasisCoefficients& coeffs,
                       const PhysicsConfig& physics = {});

struct LeftAmplitudes {
    Complex incident;   // right-moving
    Complex reflected;  // left-moving
};

struct RightAmplitudes {
    Complex outgoing;  // right-moving
    Complex incoming;  // left-moving
};

/// Projects the exact solution at x onto local right/left moving waves. The
/// amplitudes are flux-normalised, so |reflected/incident|^2 is R. Throws
/// DomainError if E <= V near x.
LeftAmplitudes asymptotic_left(double x, double energy, const LambertBarrier& barrier,
                               const BasisCoefficients& coeffs, const PhysicsConfig& physics = {},
                               wkb::Matching matching = wkb::Matching::wkb_phase);

RightAmplitudes asymptotic_right(double x, double energy, const LambertBarrier& barrier,
                                 const BasisCoefficients& coeffs, const PhysicsConfig& physics = {},
                                 wkb::Matching matching = wkb::Matching::wkb_phase);

}  // namespace prodlog
