#pragma once

#include "prodlog/potentials.hpp"
#include "prodlog/specfun.hpp"

namespace prodlog::wkb {

/// Local basis used to split a numerical or analytic solution into right-
/// and left-moving waves.
enum class Matching {
    plane_wave,  // exp(+-i p x) with the local p = sqrt(2m(E-V))/hbar
    wkb_phase,   // q^{-1/2} exp(+-i int q) with second-order corrected q
};

/// Local momentum q and dq/dx at a point.
struct LocalWave {
    double q = 0.0;
    double dq = 0.0;
};

/// Builds the local wave at x. Derivatives of V come from finite differences
/// with spacing `fd_step`; throws DomainError if E <= V anywhere on the
/// stencil (turning point inside the matching window).
LocalWave local_wave(const PotentialFn& potential, double x, double energy, const PhysicsConfig& physics,
                     Matching matching, double fd_step = 1e-2);

/// psi = A phi_+ + B phi_- with phi_+- = q^{-1/2} exp(+-i S), S(x) = 0 at the
/// matching point. With this normalisation |A|^2 and |B|^2 are the
/// right- and left-moving probability fluxes (in units of hbar/m).
struct Amplitudes {
    Complex right_moving;
    Complex left_moving;
};

Amplitudes decompose(Complex psi, Complex dpsi, const LocalWave& wave);

}  // namespace prodlog::wkb
