#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "prodlog/errors.hpp"
#include "prodlog/heun.hpp"
#include "prodlog/oracle.hpp"

using namespace prodlog;
using namespace prodlog::heun;

namespace {

double rel(Complex value, Complex reference) { return std::abs(value - reference) / std::abs(reference); }

BiconfluentParams reduced(double e, const GeneralizedBarrier& b) { return map_params(e, b).biconfluent(); }

double normalized_wronskian(const WaveValue& p, const WaveValue& q)
{
    return std::abs(p.psi * q.dpsi - p.dpsi * q.psi) / (std::abs(p.psi * q.dpsi) + std::abs(p.dpsi * q.psi));
}

}  // namespace

TEST_CASE("parameter map at E = 2, V1 = 1")
{
    const GeneralizedSolutionParams p = map_params(2.0, GeneralizedBarrier{0.0, 1.0, 0.0, 1.0, 0.0});
    CHECK(std::abs(p.gamma - 2.0 * kI) < 1e-15);
    CHECK(std::abs(p.alpha - 1.0) < 1e-15);
    CHECK(std::abs(p.delta - p.gamma) < 1e-15);
    const BiconfluentParams b = p.biconfluent();
    CHECK(b.eps == Complex(0.0));
    CHECK(b.q == -b.alpha);
    CHECK(std::abs(b.z0() + 1.0) < 1e-15);
}

TEST_CASE("parameter map with V3")
{
    const PhysicsConfig physics;
    const GeneralizedBarrier b{0.3, 1.0, 0.2, 0.8, 0.0};
    const GeneralizedSolutionParams p = map_params(3.0, b, physics);
    const double k = physics.kinetic_factor();
    const Complex gamma = 2.0 * 0.8 * std::sqrt(Complex(k * (-3.0 + 0.3 + 1.0 + k * 0.64 * 0.04)));
    CHECK(std::abs(p.gamma - gamma) < 1e-14);
    CHECK(std::abs(p.delta - (gamma + 2.0 * k * 0.64 * 0.2)) < 1e-14);
    CHECK(std::abs(p.alpha - k * 0.64 * (1.0 + p.delta * 0.2)) < 1e-14);
    CHECK(map_params(2.0, GeneralizedBarrier{0.0, 0.0, 0.0, 1.0, 0.0}).alpha == Complex(0.0));
}

TEST_CASE("gamma matches i delta of the lambert parameters")
{
    for (double e : {1.1, 2.0, 7.0}) {
        for (double sigma : {0.1, 1.0, 4.0}) {
            const GeneralizedSolutionParams p = map_params(e, GeneralizedBarrier{0.0, 1.0, 0.0, sigma, 0.0});
            const ScatterParams s = scatter_params(e, LambertBarrier{1.0, sigma, 0.0});
            CHECK(std::abs(p.gamma - kI * s.delta) <= 1e-14 * std::abs(p.gamma));
        }
    }
}

TEST_CASE("gamma squared is linear in energy")
{
    const GeneralizedBarrier b{0.2, 1.0, 0.5, 0.7, 0.0};
    const double es[3] = {1.5, 2.5, 4.0};
    Complex g2[3];
    for (int i = 0; i < 3; ++i) {
        const Complex g = map_params(es[i], b).gamma;
        g2[i] = g * g;
    }
    const double slope = -8.0 * 0.5 * 0.49;
    CHECK(std::abs((g2[1] - g2[0]) / (es[1] - es[0]) - slope) < 1e-12);
    CHECK(std::abs((g2[2] - g2[1]) / (es[2] - es[1]) - slope) < 1e-12);
}

TEST_CASE("series is normalised and satisfies the equation")
{
    const BiconfluentParams p = reduced(2.0, GeneralizedBarrier{0.0, 1.0, 0.0, 1.0, 0.0});
    const SeriesValue at0 = biconfluent_series(p, 0.0);
    CHECK(at0.u == Complex(1.0));
    const SeriesValue v = biconfluent_series(p, 0.3);
    CHECK(biconfluent_residual(p, 0.3, v) <= 1e-9);
    CHECK(v.truncation < 1e-15);

    const BiconfluentParams general{{0.4, 1.3}, {-0.5, 0.2}, {0.3, -0.1}, {1.2, 0.4}, {0.7, -0.3}};
    for (Complex z : {Complex(0.2, 0.1), Complex(-0.5, 0.3), Complex(0.0, 0.8)})
        CHECK(biconfluent_residual(general, z, biconfluent_series(general, z)) <= 1e-9);
}

TEST_CASE("series refuses non-positive integer gamma")
{
    BiconfluentParams p{-2.0, 1.0, 0.0, 1.0, -1.0};
    CHECK_THROWS_AS(biconfluent_series(p, 0.5), DomainError);
    p.gamma = 0.0;
    CHECK_THROWS_AS(biconfluent_series(p, 0.5), DomainError);
}

TEST_CASE("derivative transform solves its derived equation")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const GeneralizedBarrier& b : {GeneralizedBarrier{0.0, 1.0, 0.0, 1.0, 0.0}, GeneralizedBarrier{0.0, 1.0, 0.2, 1.0, 0.0}}) {
        const BiconfluentParams p = reduced(3.0, b);
        for (int i = 0; i < 10; ++i) {
            const Complex z(1.5 * u(rng), 1.5 * u(rng));
            CHECK(derived_equation_residual(p, z, biconfluent_series(p, z)) <= 1e-8);
        }
    }
}

TEST_CASE("transform vanishes with u' and stays finite at the apparent singularity")
{
    const BiconfluentParams p = reduced(2.0, GeneralizedBarrier{0.0, 1.0, 0.0, 1.0, 0.0});
    CHECK(w_transform(p, 0.7, 1.0, 0.0).w == Complex(0.0));
    for (double eps : {1e-3, 1e-6, 1e-9}) {
        const Complex z = p.z0() + Complex(0.0, eps);
        const SeriesValue v = biconfluent_series(p, z);
        const TransformValue t = w_transform(p, z, v.u, v.du);
        CHECK(std::isfinite(std::abs(t.w)));
        CHECK(std::isfinite(std::abs(t.dw)));
        CHECK(std::abs(t.w) < 1e3);
    }
}

TEST_CASE("invariant identity holds only on the solvable family")
{
    for (const GeneralizedBarrier& b : {GeneralizedBarrier{0.0, 1.0, 0.0, 1.0, 0.0}, GeneralizedBarrier{0.0, 1.0, 0.2, 1.0, 0.0},
                                        GeneralizedBarrier{0.5, 1.0, 2.0, 0.5, 0.0}}) {
        const BiconfluentParams p = reduced(2.0, b);
        for (double z : {0.5, 1.0, 2.0}) CHECK(invariant_match(p, z, b, 2.0).gap <= 1e-9);
    }
    // V2 off the constraint by 1%
    const GeneralizedBarrier b{0.0, 1.0, 2.0, 1.0, 0.0};
    const BiconfluentParams p = reduced(2.0, b);
    const PhysicsConfig physics;
    const double v2 = 1.01 * b.v2(physics);
    const auto perturbed = [&](double z) {
        return b.v0 + b.v1 / (1 + z) + v2 / ((1 + z) * (1 + z)) + b.v3 / ((1 + z) * (1 + z) * (1 + z));
    };
    CHECK(invariant_match(p, 1.0, b.sigma, perturbed, 2.0).gap > 1e-3);
    const auto exact = [&](double z) { return potentials::evaluate_in_z(b, z, physics); };
    CHECK(invariant_match(p, 1.0, b.sigma, exact, 2.0).gap <= 1e-9);
}

TEST_CASE("eps = 0 reduction matches the series")
{
    const BiconfluentParams p = reduced(2.5, GeneralizedBarrier{0.1, 1.0, 0.3, 0.9, 0.0});
    const HypergeometricReduction r = reduce_to_hypergeometric(p);
    CHECK(r.lambda.imag() >= 0.0);
    CHECK(std::abs(r.lambda * r.lambda - (p.delta * p.delta - 4.0 * p.alpha)) < 1e-13);
    CHECK(r.b == p.gamma);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 20; ++i) {
        const Complex z = std::polar(std::sqrt(radius(rng)), angle(rng));
        const SeriesValue v = biconfluent_series(p, z);
        CHECK(rel(r.evaluate(z), v.u) <= 1e-10);
        CHECK(rel(r.derivative(z), v.du) <= 1e-10);
    }
}

TEST_CASE("reduction reproduces the kummer basis parameters")
{
    const double e = 2.0, sigma = 1.0;
    const HypergeometricReduction r =
        reduce_to_hypergeometric(map_params(e, GeneralizedBarrier{0.0, 1.0, 0.0, sigma, 0.0}));
    const ScatterParams s = scatter_params(e, LambertBarrier{1.0, sigma, 0.0});
    CHECK(std::abs(r.companion_a() - (1.0 + kI * (s.a - s.delta))) < 1e-13);
    CHECK(std::abs(r.companion_b() - (2.0 - kI * s.delta)) < 1e-13);
    CHECK(std::abs(std::abs(r.lambda) - s.s) < 1e-13);  // z -> s z
}

TEST_CASE("vanishing alpha gives an elementary solution")
{
    const BiconfluentParams p = reduced(2.0, GeneralizedBarrier{0.0, 0.0, 0.0, 1.0, 0.0});
    const HypergeometricReduction r = reduce_to_hypergeometric(p);
    for (Complex z : {Complex(0.3), Complex(-0.4, 0.6), Complex(2.0, 1.0)}) {
        CHECK(std::abs(r.evaluate(z) - 1.0) < 1e-13);
        CHECK(std::abs(biconfluent_series(p, z).u - 1.0) < 1e-13);
    }
}

TEST_CASE("reduction refuses eps != 0")
{
    BiconfluentParams p = reduced(2.0, GeneralizedBarrier{0.0, 1.0, 0.0, 1.0, 0.0});
    p.eps = 0.1;
    CHECK_THROWS_AS(reduce_to_hypergeometric(p), UnsupportedRegimeError);
}

TEST_CASE("heun wavefunction solves the schrodinger equation")
{
    std::vector<double> xs;
    for (double x = -10.0; x <= 10.0; x += 0.25) xs.push_back(x);
    struct Case {
        double e;
        GeneralizedBarrier b;
    };
    for (const Case& c : {Case{2.0, {0.0, 1.0, 0.0, 1.0, 0.0}}, Case{3.0, {0.0, 1.0, 0.2, 1.0, 0.0}},
                          Case{4.0, {0.5, 1.0, 1.0, 0.5, 0.3}}}) {
        const PotentialFn v = potentials::as_function(c.b);
        const double res = oracle::schrodinger_residual(
            [&](double x) { return heun_wavefunction(x, c.e, c.b).psi; }, v, c.e, xs);
        CHECK(res <= 1e-6);
    }
}

TEST_CASE("heun and lambert wavefunctions are proportional")
{
    const double e = 2.0;
    const GeneralizedBarrier g{0.0, 1.0, 0.0, 1.0, 0.0};
    const LambertBarrier l{1.0, 1.0, 0.0};
    const BasisCoefficients c = lambert_equivalent_coefficients(scatter_params(e, l));
    const LambertSolution lambert(e, l, c);
    const LambertSolution kummer(e, l, {1.0, 0.0});
    Complex ratio0 = 0.0;
    for (double x = -5.0; x <= 5.0; x += 0.5) {
        const WaveValue h = heun_wavefunction(x, e, g);
        CHECK(normalized_wronskian(h, lambert(x)) <= 1e-8);
        const Complex ratio = h.psi / lambert(x).psi;
        if (x == -5.0) ratio0 = ratio;
        CHECK(std::abs(ratio - ratio0) <= 1e-8 * std::abs(ratio0));
    }
    // the regular solution is not the pure left-to-right state
    CHECK(normalized_wronskian(heun_wavefunction(0.0, e, g), kummer(0.0)) > 1e-3);
}
