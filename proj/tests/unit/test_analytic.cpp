#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "prodlog/analytic.hpp"
#include "prodlog/errors.hpp"
#include "prodlog/oracle.hpp"

using namespace prodlog;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

// Extended-precision evaluations of the wavenumber form at k1 = sqrt 2, k2 = 1.
constexpr double kR211 = 1.105201177049414385798e-06;
constexpr double kRStep = 0.02943725152285941437974;

ScatterParams params(double e, double v0, double sigma) { return scatter_params(e, LambertBarrier{v0, sigma, 0.0}); }

}  // namespace

TEST_CASE("scatter_params at E = 2, V0 = 1, sigma = 1")
{
    const WaveNumbers k = wave_numbers(2.0, 1.0);
    CHECK(std::abs(k.k1 - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(k.k2 - 1.0) < 1e-15);
    const ScatterParams p = params(2.0, 1.0, 1.0);
    CHECK(std::abs(p.s - 2.0 * std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(p.delta - 2.0) < 1e-15);
    CHECK(std::abs(p.a - 2.060660171779821) < 1e-14);
    // a = delta (delta + s)/(2 s) + 2 m sigma^2 V0/(hbar^2 s)
    CHECK(std::abs(p.a - (p.delta * (p.delta + p.s) / (2.0 * p.s) + 1.0 / p.s)) < 1e-14);
}

TEST_CASE("scatter_params limits and errors")
{
    const ScatterParams free = params(3.0, 0.0, 0.7);
    CHECK(std::abs(free.delta - free.s) < 1e-15);
    CHECK(std::abs(free.a - free.s) < 1e-14);
    const ScatterParams small = params(2.0, 1.0, 1e-6);
    CHECK(rel(small.s / 1e-6, 2.0 * std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(params(0.0, 1.0, 1.0), DomainError);
    const ScatterParams below = params(0.5, 1.0, 1.0);
    CHECK_FALSE(below.above_threshold());
    CHECK_THROWS_AS(reflection_closed_form(below), UnsupportedRegimeError);
    CHECK_THROWS_AS(reflection_wavenumbers(wave_numbers(0.5, 1.0), 1.0), UnsupportedRegimeError);
}

TEST_CASE("reflection at E = 2, V0 = 1, sigma = 1")
{
    const ReflectionResult closed = reflection_closed_form(params(2.0, 1.0, 1.0));
    const ReflectionResult wn = reflection_wavenumbers(wave_numbers(2.0, 1.0), 1.0);
    CHECK(rel(closed.r, kR211) < 1e-12);
    CHECK(rel(wn.r, kR211) < 1e-13);
    CHECK(std::abs(closed.r + closed.t - 1.0) < 1e-12);
    CHECK(closed.method == Method::closed_form);
    CHECK(wn.method == Method::wavenumber_form);
}

TEST_CASE("closed form equals the wavenumber form on the parameter grid")
{
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double ratio = 1.01 + (10.0 - 1.01) * i / 9.0;
            const double sigma = 0.05 * std::pow(100.0, j / 9.0);
            for (double v0 : {0.5, 1.0, 3.0}) {
                const double e = ratio * v0;
                const double a = reflection_closed_form(params(e, v0, sigma)).r;
                const double b = reflection_wavenumbers(wave_numbers(e, v0), sigma).r;
                CHECK(a >= 0.0);
                CHECK(a <= 1.0);
                worst = std::max(worst, rel(a, b));
            }
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("reflection limits")
{
    CHECK(reflection_closed_form(params(2.0, 0.0, 1.0)).r == doctest::Approx(0.0));
    const WaveNumbers at_top{std::sqrt(2.0), 0.0};
    CHECK(std::abs(reflection_wavenumbers(at_top, 1.0).r - 1.0) < 1e-15);
    CHECK(reflection_closed_form(params(1.0 + 1e-12, 1.0, 0.3)).r > 0.9999);
    const WaveNumbers equal{1.0, 1.0};
    CHECK(reflection_step(equal).r == 0.0);
    CHECK(reflection_tanh(equal, 1.0).r == 0.0);
}

TEST_CASE("step and tanh baselines")
{
    const WaveNumbers k = wave_numbers(2.0, 1.0);
    CHECK(rel(reflection_step(k).r, kRStep) < 1e-14);
    CHECK(std::abs(reflection_step(k).r - 0.0294373) < 1e-7);
    CHECK(rel(reflection_tanh(k, 1e-6).r, kRStep) < 1e-9);
    const double x = kPi * 0.8;
    const double direct = std::pow(std::sinh(x * (k.k1 - 1.0)) / std::sinh(x * (k.k1 + 1.0)), 2);
    CHECK(rel(reflection_tanh(k, 0.8).r, direct) < 1e-13);
}

TEST_CASE("large widths do not overflow")
{
    for (double sigma : {12.0, 30.0, 50.0}) {  // ln R ~ -4 pi sigma k2
        const double r = reflection_closed_form(params(1.5, 1.0, sigma)).r;
        CHECK(std::isfinite(r));
        CHECK(r > 0.0);
        CHECK(rel(r, reflection_wavenumbers(wave_numbers(1.5, 1.0), sigma).r) < 1e-12);
    }
    CHECK(reflection_closed_form(params(1.5, 1.0, 1e3)).r == 0.0);  // underflows cleanly
    CHECK(std::abs(log_sinh(800.0) - (800.0 - std::log(2.0))) < 1e-12);
    CHECK(std::abs(log_sinh(0.5) - std::log(std::sinh(0.5))) < 1e-15);
}

TEST_CASE("step limit and first-order width correction")
{
    const WaveNumbers k = wave_numbers(2.0, 1.0);
    CHECK(small_sigma_expansion(k, 0.0) == doctest::Approx(kRStep).epsilon(1e-14));
    CHECK(rel(small_sigma_expansion(k, 1e-3), kRStep * (1.0 - 2.0 * kPi * 1e-3)) < 1e-14);
    CHECK(rel(reflection_wavenumbers(k, 1e-9).r, kRStep) < 1e-7);

    // log-log slope of the truncation error over sigma = 1e-2 .. 1e-4 is 2
    std::vector<double> ls, le;
    for (double sigma : {1e-2, 1e-3, 1e-4}) {
        ls.push_back(std::log(sigma));
        le.push_back(std::log(std::abs(reflection_wavenumbers(k, sigma).r - small_sigma_expansion(k, sigma))));
    }
    const double mx = (ls[0] + ls[1] + ls[2]) / 3.0, my = (le[0] + le[1] + le[2]) / 3.0;
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < 3; ++i) {
        sxy += (ls[i] - mx) * (le[i] - my);
        sxx += (ls[i] - mx) * (ls[i] - mx);
    }
    CHECK(std::abs(sxy / sxx - 2.0) < 0.05);
}

TEST_CASE("reflection decreases with energy")
{
    for (double sigma : {0.05, 0.15, 0.5, 1.0, 5.0}) {
        double prev = 1.0;
        for (int i = 0; i <= 50; ++i) {
            const double r = reflection_closed_form(params(1.01 + 9.0 * i / 50.0, 1.0, sigma)).r;
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("lambert reflects less than tanh of equal width")
{
    const WaveNumbers k = wave_numbers(1.5, 1.0);
    for (double sigma : {0.5, 1.0, 2.0, 4.0, 8.0, 12.0})
        CHECK(reflection_wavenumbers(k, sigma).r < reflection_tanh(k, sigma).r);
}

TEST_CASE("basis members satisfy the hypergeometric equation")
{
    const ScatterParams p = params(2.0, 1.0, 1.0);
    auto member = [&](BasisMember m) { return [&p, m](double z) { return hypergeometric_basis(p, m, z); }; };
    CHECK(hypergeom_ode_residual(member(BasisMember::kummer), p, 0.5) <= 1e-9);
    CHECK(hypergeom_ode_residual(member(BasisMember::tricomi), p, 2.0) <= 1e-9);
    for (double z : {1e-3, 0.05, 1.0, 10.0, 80.0}) {
        CHECK(hypergeom_ode_residual(member(BasisMember::kummer), p, z) <= 1e-9);
        CHECK(hypergeom_ode_residual(member(BasisMember::tricomi), p, z) <= 1e-9);
    }
    CHECK(hypergeom_ode_residual([](double) { return Jet2{}; }, p, 1.0) == 0.0);
}

TEST_CASE("analytic wavefunction solves the schrodinger equation")
{
    const LambertBarrier barrier{1.0, 1.0, 0.0};
    const PotentialFn v = potentials::as_function(barrier);
    const std::vector<double> xs{-10.0, -1.0, 0.0, 1.0, 10.0};
    for (const BasisCoefficients c : {BasisCoefficients{1.0, 0.0}, BasisCoefficients{0.0, 1.0},
                                      BasisCoefficients{{0.3, 1.0}, {-2.0, 0.5}}}) {
        const LambertSolution psi(2.0, barrier, c);
        const double residual = oracle::schrodinger_residual([&](double x) { return psi(x).psi; }, v, 2.0, xs);
        CHECK(residual <= 1e-6);
    }
}

TEST_CASE("analytic derivative matches finite differences")
{
    const LambertBarrier barrier{1.0, 0.5, 0.3};
    const BasisCoefficients c{1.0, {0.0, 0.5}};
    const double h = 1e-4;
    for (double x : {-8.0, -0.2, 0.3, 2.0, 9.0}) {
        const Complex fd = (wavefunction(x + h, 1.7, barrier, c).psi - wavefunction(x - h, 1.7, barrier, c).psi) / (2 * h);
        const Complex d = wavefunction(x, 1.7, barrier, c).dpsi;
        CHECK(std::abs(fd - d) <= 1e-6 * std::abs(d));
    }
}

TEST_CASE("left-to-right solution carries only an outgoing wave on the right")
{
    const LambertBarrier barrier{1.0, 1.0, 0.0};
    const RightAmplitudes right = asymptotic_right(20.0, 2.0, barrier, {1.0, 0.0});
    CHECK(std::abs(right.incoming) / std::abs(right.outgoing) < 1e-6);
    const LeftAmplitudes left = asymptotic_left(-40.0, 2.0, barrier, {1.0, 0.0});
    CHECK(rel(std::norm(left.reflected / left.incident), kR211) < 1e-3);

    // flux: |incident|^2 = |reflected|^2 + |outgoing|^2
    CHECK(rel(std::norm(left.incident), std::norm(left.reflected) + std::norm(right.outgoing)) < 1e-6);
}

TEST_CASE("tricomi member is a single wave on the left")
{
    // The member is the time reverse of the right-to-left scattering state:
    // one right-moving wave on the left, so its conjugate moves only leftward.
    const LambertBarrier barrier{1.0, 1.0, 0.0};
    const LeftAmplitudes left = asymptotic_left(-40.0, 2.0, barrier, {0.0, 1.0});
    CHECK(std::abs(left.reflected) / std::abs(left.incident) < 1e-6);

    const PotentialFn v = potentials::as_function(barrier);
    const WaveValue w = wavefunction(-40.0, 2.0, barrier, {0.0, 1.0});
    const wkb::LocalWave lw = wkb::local_wave(v, -40.0, 2.0, {}, wkb::Matching::wkb_phase);
    const wkb::Amplitudes conj = wkb::decompose(std::conj(w.psi), std::conj(w.dpsi), lw);
    CHECK(std::abs(conj.right_moving) / std::abs(conj.left_moving) < 1e-6);

    const RightAmplitudes right = asymptotic_right(20.0, 2.0, barrier, {0.0, 1.0});
    CHECK(std::abs(right.incoming) > 0.0);
    CHECK(std::abs(right.outgoing) > 0.0);
}

TEST_CASE("density is flat on the right and fringed on the left")
{
    const LambertBarrier barrier{1.0, 1.0, 0.0};
    const LambertSolution psi(2.0, barrier, {1.0, 0.0});
    auto contrast = [&](double lo, double hi) {
        double mn = 1e300, mx = 0.0;
        for (double x = lo; x <= hi; x += 1e-3) {
            const double p = std::norm(psi(x).psi);
            mn = std::min(mn, p);
            mx = std::max(mx, p);
        }
        return (mx - mn) / (mx + mn);
    };
    CHECK(contrast(25.0, 35.0) < 1e-8);
    const double expected = 2.0 * std::sqrt(kR211) / (1.0 + kR211);
    const double fringe = contrast(-3000.0, -3000.0 + 2.0 * kPi / std::sqrt(2.0));
    CHECK(rel(fringe, expected) < 0.02);
}

TEST_CASE("wronskian of the two basis solutions is constant")
{
    const LambertBarrier barrier{1.0, 1.0, 0.0};
    const LambertSolution a(2.0, barrier, {1.0, 0.0});
    const LambertSolution b(2.0, barrier, {0.0, 1.0});
    auto wronskian = [&](double x) {
        const WaveValue p = a(x), q = b(x);
        return p.psi * q.dpsi - p.dpsi * q.psi;
    };
    const Complex w0 = wronskian(0.0);
    CHECK(std::abs(w0) > 0.0);
    for (double x = -15.0; x <= 15.0; x += 0.5) CHECK(std::abs(wronskian(x) - w0) <= 1e-8 * std::abs(w0));
}

TEST_CASE("basis coefficients must not both vanish")
{
    CHECK_THROWS_AS((BasisCoefficients{0.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS(LambertSolution(2.0, LambertBarrier{}, BasisCoefficients{0.0, 0.0}), DomainError);
}
