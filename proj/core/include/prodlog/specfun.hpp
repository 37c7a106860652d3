#pragma once

#include <complex>

namespace prodlog {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

namespace specfun {

/// Principal branch of the Lambert W function (product logarithm) for real
/// t >= -1/e, i.e. the w >= -1 that solves w * exp(w) = t.
double lambert_w(double t);

/// W(exp(log_t)) evaluated without forming exp(log_t); valid for any real
/// log_t, including values where the exponential overflows.
double lambert_w_exp(double log_t);

/// Principal branch of ln Gamma(z). Continuous on Re z > 0; for Re z < 1/2
/// the reflection formula is used and the imaginary part is only defined
/// modulo 2*pi. Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// 1/Gamma(z); exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// base^exponent on the principal branch, arg(base) in (-pi, pi].
Complex complex_pow(Complex base, Complex exponent);

/// Kummer's confluent hypergeometric function M(a; b; z) = 1F1(a; b; z).
Complex kummer_m(Complex a, Complex b, Complex z);

/// Tricomi's confluent hypergeometric function U(a; b; z), principal branch
/// |arg z| < pi. Throws DomainError for z = 0.
Complex tricomi_u(Complex a, Complex b, Complex z);

namespace detail {

// Exposed for tests and benchmarks; callers should use kummer_m/tricomi_u.

struct SeriesSum {
    Complex value;
    double max_term = 0.0;  // largest |term| seen, for cancellation checks
    bool converged = false;
};

SeriesSum kummer_series(Complex a, Complex b, Complex z);

struct AsymptoticSum {
    Complex value;
    double error_estimate = 0.0;  // absolute
    bool usable = false;
};

AsymptoticSum kummer_asymptotic(Complex a, Complex b, Complex z);
AsymptoticSum tricomi_asymptotic(Complex a, Complex b, Complex z);

struct Jet1 {
    Complex value;
    Complex derivative;
};

/// Carries a solution of z y'' + (b - z) y' - a y = 0 from `from` to `to`
/// along the straight segment by repeated local Taylor expansion. The
/// segment must not pass through the origin.
Jet1 continue_kummer_ode(Complex a, Complex b, Complex from, Jet1 initial, Complex to);

}  // namespace detail

}  // namespace specfun
}  // namespace prodlog
