#include "prodlog/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "prodlog/errors.hpp"

namespace prodlog {

namespace {

using specfun::kummer_m;
using specfun::tricomi_u;

constexpr double kPi = std::numbers::pi;
constexpr double kParamIdentityTolerance = 1e-13;

ReflectionResult make_result(double r, Method method)
{
    ReflectionResult out;
    out.r = r;
    out.t = 1.0 - r;
    out.method = method;
    return out;
}

void require_above_threshold(const WaveNumbers& k)
{
    if (!k.above_threshold())
        throw UnsupportedRegimeError("reflection below the barrier top is outside the supported regime");
    if (!(k.k1 > 0.0)) throw DomainError("reflection: k1 must be positive");
    if (k.k2.real() > k.k1) throw DomainError("reflection: requires k1 >= k2");
}

// ln|sinh x| with the sign returned separately.
double signed_log_sinh(double x, double& sign)
{
    sign = x < 0.0 ? -1.0 : 1.0;
    return log_sinh(std::abs(x));
}

}  // namespace

WaveNumbers wave_numbers(double energy, double v0, const PhysicsConfig& physics)
{
    physics.validate();
    if (!(energy > 0.0)) throw DomainError("wave_numbers: energy must be positive");
    const double factor = physics.kinetic_factor();
    return {std::sqrt(factor * energy), std::sqrt(Complex(factor * (energy - v0), 0.0))};
}

ScatterParams scatter_params(double energy, const LambertBarrier& barrier, const PhysicsConfig& physics)
{
    if (!(barrier.sigma > 0.0)) throw DomainError("scatter_params: sigma must be positive");
    const WaveNumbers k = wave_numbers(energy, barrier.v0, physics);
    ScatterParams p;
    p.s = 2.0 * barrier.sigma * k.k1;
    p.delta = 2.0 * barrier.sigma * k.k2;
    p.a = (p.s + p.delta) * (p.s + p.delta) / (4.0 * p.s);

    // Same quantity written as delta(delta+s)/(2s) + (2m/hbar^2) sigma^2 V0 / s.
    const Complex a_alt = p.delta * (p.delta + p.s) / (2.0 * p.s)
                          + physics.kinetic_factor() * barrier.sigma * barrier.sigma * barrier.v0 / p.s;
    const double scale = std::max({std::abs(p.a), std::abs(a_alt), 1e-300});
    if (std::abs(p.a - a_alt) > kParamIdentityTolerance * scale)
        throw Error("scatter_params: the two forms of a disagree");
    return p;
}

void BasisCoefficients::validate() const
{
    if (c1 == Complex(0.0, 0.0) && c2 == Complex(0.0, 0.0))
        throw DomainError("BasisCoefficients: c1 and c2 cannot both vanish");
}

std::string_view method_name(Method method)
{
    switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::wavenumber_form: return "wavenumber_form";
    case Method::oracle: return "oracle";
    case Method::step: return "step";
    case Method::tanh: return "tanh";
    }
    return "unknown";
}

double log_sinh(double x)
{
    if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
    return std::log(std::sinh(x));
}

ReflectionResult reflection_closed_form(const ScatterParams& p)
{
    if (!p.above_threshold() || p.a.imag() != 0.0)
        throw UnsupportedRegimeError("reflection_closed_form: requires real delta, s and a");
    const double s = p.s;
    const double delta = p.delta.real();
    const double a = p.a.real();
    if (!(s > 0.0)) throw DomainError("reflection_closed_form: s must be positive");

    ReflectionResult out;
    if (delta == s) {
        out = make_result(0.0, Method::closed_form);  // no barrier
    } else {
        const double a_minus_delta = a - delta;
        if (a_minus_delta == 0.0) throw DomainError("reflection_closed_form: degenerate a = delta");
        double sign_num = 1.0;
        double sign_den = 1.0;
        const double log_num = signed_log_sinh(kPi * a_minus_delta, sign_num);
        const double log_den = signed_log_sinh(kPi * a, sign_den);
        const double ratio = a / a_minus_delta;
        const double log_r = -kPi * delta + std::log(std::abs(ratio)) + 2.0 * std::log(std::abs(s - delta) / (s + delta))
                             + log_num - log_den;
        const double sign = (ratio < 0.0 ? -1.0 : 1.0) * sign_num * sign_den;
        out = make_result(sign * std::exp(log_r), Method::closed_form);
    }
    out.diagnostics = {{"a", a}, {"delta", delta}, {"s", s}};
    return out;
}

ReflectionResult reflection_wavenumbers(const WaveNumbers& k, double sigma)
{
    require_above_threshold(k);
    if (!(sigma > 0.0)) throw DomainError("reflection_wavenumbers: sigma must be positive");
    const double k1 = k.k1;
    const double k2 = k.k2.real();
    const double scale = kPi * sigma / (2.0 * k1);
    const double log_r = -2.0 * kPi * sigma * k2 + log_sinh(scale * (k1 - k2) * (k1 - k2))
                         - log_sinh(scale * (k1 + k2) * (k1 + k2));
    auto out = make_result(std::exp(log_r), Method::wavenumber_form);
    out.diagnostics = {{"k1", k1}, {"k2", k2}, {"sigma", sigma}};
    return out;
}

ReflectionResult reflection_step(const WaveNumbers& k)
{
    require_above_threshold(k);
    const double ratio = (k.k1 - k.k2.real()) / (k.k1 + k.k2.real());
    return make_result(ratio * ratio, Method::step);
}

ReflectionResult reflection_tanh(const WaveNumbers& k, double d)
{
    require_above_threshold(k);
    if (!(d > 0.0)) throw DomainError("reflection_tanh: d must be positive");
    const double k2 = k.k2.real();
    const double log_r = 2.0 * (log_sinh(kPi * d * (k.k1 - k2)) - log_sinh(kPi * d * (k.k1 + k2)));
    auto out = make_result(std::exp(log_r), Method::tanh);
    out.diagnostics = {{"d", d}};
    return out;
}

double small_sigma_expansion(const WaveNumbers& k, double sigma)
{
    return reflection_step(k).r * (1.0 - 2.0 * kPi * sigma * k.k2.real());
}

Jet2 hypergeometric_basis(const ScatterParams& p, BasisMember member, double z)
{
    if (!(z > 0.0)) throw DomainError("hypergeometric_basis: z must be positive");
    const Complex big_a = kI * p.a;
    const Complex big_b = kI * p.delta;
    const Complex w(0.0, p.s * z);
    const Complex dw = kI * p.s;  // dw/dz

    if (member == BasisMember::tricomi) {
        const Complex u0 = tricomi_u(big_a, big_b, w);
        const Complex u1 = -big_a * tricomi_u(big_a + 1.0, big_b + 1.0, w);
        const Complex u2 = big_a * (big_a + 1.0) * tricomi_u(big_a + 2.0, big_b + 2.0, w);
        return {u0, dw * u1, dw * dw * u2};
    }

    const Complex ka = 1.0 + kI * (p.a - p.delta);
    const Complex kb = 2.0 - kI * p.delta;
    const Complex m0 = kummer_m(ka, kb, w);
    const Complex m1 = ka / kb * kummer_m(ka + 1.0, kb + 1.0, w);
    const Complex m2 = ka * (ka + 1.0) / (kb * (kb + 1.0)) * kummer_m(ka + 2.0, kb + 2.0, w);
    const Complex e = 1.0 - big_b;  // exponent of w
    const Complex pw = specfun::complex_pow(w, e);
    const Complex f0 = pw * m0;
    const Complex f1 = e * pw / w * m0 + pw * m1;
    const Complex f2 = e * (e - 1.0) * pw / (w * w) * m0 + 2.0 * e * pw / w * m1 + pw * m2;
    return {f0, dw * f1, dw * dw * f2};
}

double hypergeom_ode_residual(const std::function<Jet2(double)>& u, const ScatterParams& p, double z)
{
    const Jet2 j = u(z);
    const Complex t1 = j.d2;
    const Complex t2 = (kI * p.delta / z - kI * p.s) * j.d1;
    const Complex t3 = p.a * p.s / z * j.value;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale == 0.0) return 0.0;
    return std::abs(t1 + t2 + t3) / scale;
}

LambertSolution::LambertSolution(double energy, const LambertBarrier& barrier, const BasisCoefficients& coeffs,
                                 const PhysicsConfig& physics)
    : barrier_(barrier), coeffs_(coeffs), params_(scatter_params(energy, barrier, physics))
{
    coeffs_.validate();
    big_a_ = kI * params_.a;
    big_b_ = kI * params_.delta;
    kummer_a_ = big_a_ - big_b_ + 1.0;
    kummer_b_ = 2.0 - big_b_;
}

WaveValue LambertSolution::operator()(double x) const
{
    const double sigma = barrier_.sigma;
    const double z = potentials::z_of_x(x, sigma, barrier_.x0);
    if (!(z > 0.0)) throw DomainError("wavefunction: Lambert coordinate underflows at this x");
    const double log_z = potentials::log_z_of_x(x, sigma, barrier_.x0);
    const double s = params_.s;
    const Complex delta = params_.delta;
    const Complex w(0.0, s * z);
    const Complex ln_w(std::log(s) + log_z, 0.5 * kPi);  // principal log of i s z

    Complex u = 0.0;
    Complex du = 0.0;  // d/dz
    if (coeffs_.c1 != Complex(0.0, 0.0)) {
        const Complex e = 1.0 - big_b_;
        const Complex pw = std::exp(e * ln_w);
        const Complex m0 = kummer_m(kummer_a_, kummer_b_, w);
        const Complex m1 = kummer_a_ / kummer_b_ * kummer_m(kummer_a_ + 1.0, kummer_b_ + 1.0, w);
        u += coeffs_.c1 * pw * m0;
        du += coeffs_.c1 * kI * s * (e * pw / w * m0 + pw * m1);
    }
    if (coeffs_.c2 != Complex(0.0, 0.0)) {
        u += coeffs_.c2 * tricomi_u(big_a_, big_b_, w);
        du += coeffs_.c2 * kI * s * (-big_a_) * tricomi_u(big_a_ + 1.0, big_b_ + 1.0, w);
    }
    // second derivative from the hypergeometric equation itself
    const Complex d2u = -(kI * delta / z - kI * s) * du - params_.a * s / z * u;

    const Complex shift = 0.5 * kI * (delta + s);
    const Complex core = du - shift * u;
    const Complex dcore = d2u - shift * du;
    const Complex pref = std::exp(0.5 * kI * delta * log_z - 0.5 * kI * s * z);
    const Complex psi = pref * core;
    const Complex dpsi_dz = pref * ((0.5 * kI * delta / z - 0.5 * kI * s) * core + dcore);
    return {psi, potentials::rho(z, sigma) * dpsi_dz};
}

WaveValue wavefunction(double x, double energy, const LambertBarrier& barrier, const BasisCoefficients& coeffs,
                       const PhysicsConfig& physics)
{
    return LambertSolution(energy, barrier, coeffs, physics)(x);
}

namespace {

wkb::Amplitudes project(double x, double energy, const LambertBarrier& barrier, const BasisCoefficients& coeffs,
                        const PhysicsConfig& physics, wkb::Matching matching)
{
    const WaveValue v = wavefunction(x, energy, barrier, coeffs, physics);
    const auto potential = potentials::as_function(barrier, physics);
    const auto wave = wkb::local_wave(potential, x, energy, physics, matching);
    return wkb::decompose(v.psi, v.dpsi, wave);
}

}  // namespace

LeftAmplitudes asymptotic_left(double x, double energy, const LambertBarrier& barrier,
                               const BasisCoefficients& coeffs, const PhysicsConfig& physics,
                               wkb::Matching matching)
{
    const auto amp = project(x, energy, barrier, coeffs, physics, matching);
    return {amp.right_moving, amp.left_moving};
}

RightAmplitudes asymptotic_right(double x, double energy, const LambertBarrier& barrier,
                                 const BasisCoefficients& coeffs, const PhysicsConfig& physics,
                                 wkb::Matching matching)
{
    const auto amp = project(x, energy, barrier, coeffs, physics, matching);
    return {amp.right_moving, amp.left_moving};
}

}  // namespace prodlog
