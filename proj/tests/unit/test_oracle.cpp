#include <cmath>
#include <vector>

#include "doctest.h"
#include "prodlog/errors.hpp"
#include "prodlog/oracle.hpp"

using namespace prodlog;
using namespace prodlog::oracle;

namespace {

double rel(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

const PotentialFn kFree = [](double) { return 0.0; };

// Phase of psi(x_min) against the exact e^{i k x_min}, free particle with k = 1.
double free_phase_error(double h)
{
    const Grid g{-60.0, 60.0, std::size_t(std::lround(120.0 / h)) + 1};
    const Solution s = integrate_schrodinger(kFree, 1.0, g);
    return std::abs(std::arg(s.samples.front().psi * std::polar(1.0, -g.x_min)));
}

}  // namespace

TEST_CASE("free propagation keeps unit modulus")
{
    const Grid g{0.0, 500.0, 10001};
    const Solution s = integrate_schrodinger(kFree, 1.0, g);
    REQUIRE(s.samples.size() == 10001);
    double drift = 0.0;
    for (const Sample& p : s.samples) drift = std::max(drift, std::abs(std::abs(p.psi) - 1.0));
    CHECK(drift <= 1e-8);
    CHECK(std::abs(s.samples.back().psi - std::polar(1.0, 500.0)) < 1e-14);
    CHECK(std::abs(s.samples.back().dpsi - kI * s.samples.back().psi) < 1e-5);
}

TEST_CASE("halving the step cuts the phase error sixteenfold")
{
    const double e1 = free_phase_error(0.1);
    const double e2 = free_phase_error(0.05);
    const double e3 = free_phase_error(0.025);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
    CHECK(e2 / e3 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("grid validation and turning points")
{
    CHECK_THROWS_AS((Grid{0.0, 1.0, 999}.validate()), DomainError);
    CHECK_THROWS_AS((Grid{1.0, 0.0, 2000}.validate()), DomainError);
    const PotentialFn wall = [](double x) { return x > 0.0 ? 5.0 : 0.0; };
    CHECK_THROWS_AS(integrate_schrodinger(wall, 1.0, Grid{-5.0, 5.0, 2001}), DomainError);
    CHECK_THROWS_AS(integrate_schrodinger(kFree, 1e5, Grid{-5.0, 5.0, 1001}), DomainError);
    CHECK_THROWS_AS(oracle_reflection(0.5, LambertBarrier{}), UnsupportedRegimeError);
    CHECK_THROWS_AS(default_grid(SqrtRatioBarrier{}, 2.0), DomainError);
}

TEST_CASE("aligned grid contains its anchor")
{
    const Grid g = aligned_grid(-3.3, 2.1, 0.0, 1.0 / 64.0);
    CHECK(g.x_min <= -3.3);
    CHECK(g.x_max >= 2.1);
    const double i0 = -g.x_min / g.step();
    CHECK(std::abs(i0 - std::round(i0)) < 1e-9);
    CHECK(g.node(std::size_t(std::lround(i0))) == 0.0);
}

TEST_CASE("step barrier reproduces the abrupt-step coefficient")
{
    for (double e : {1.2, 2.0, 3.0}) {
        const double r = oracle_reflection(e, StepBarrier{1.0}).r;
        CHECK(rel(r, reflection_step(wave_numbers(e, 1.0)).r) <= 1e-6);
    }
}

TEST_CASE("tanh barrier reproduces its closed form")
{
    const double r = oracle_reflection(1.5, TanhBarrier{1.0, 0.5}).r;
    CHECK(rel(r, reflection_tanh(wave_numbers(1.5, 1.0), 0.5).r) <= 1e-4);
}

TEST_CASE("lambert barrier agrees with the closed form")
{
    const ReflectionResult o = oracle_reflection(2.0, LambertBarrier{1.0, 1.0, 0.0});
    CHECK(rel(o.r, 1.105201177049414e-06) <= 1e-3);
    CHECK(o.method == Method::oracle);
    CHECK(std::abs(o.diagnostics.at("flux_residual")) <= 1e-6);
    CHECK(o.diagnostics.at("rounds") == 3.0);
}

TEST_CASE("no barrier, no reflection")
{
    CHECK(oracle_reflection(2.0, LambertBarrier{0.0, 1.0, 0.0}).r <= 1e-10);
}

TEST_CASE("flux is conserved")
{
    struct Case {
        double e;
        Barrier b;
    };
    for (const Case& c : {Case{1.5, LambertBarrier{1.0, 0.5, 0.0}}, Case{1.1, LambertBarrier{1.0, 0.15, 0.0}},
                          Case{2.0, TanhBarrier{1.0, 1.0}}, Case{1.5, StepBarrier{1.0}}}) {
        const ReflectionResult o = oracle_reflection(c.e, c.b);
        CHECK(std::abs(o.diagnostics.at("flux_residual")) <= 1e-6);
    }
}

TEST_CASE("doubling box and node count leaves R unchanged")
{
    const LambertBarrier b{1.0, 0.5, 0.0};
    const Grid g = default_grid(b, 1.5);
    OracleConfig wide;
    wide.grid = Grid{2.0 * g.x_min, 2.0 * g.x_max, 2 * (g.n - 1) + 1};
    const double r1 = oracle_reflection(1.5, b).r;
    const double r2 = oracle_reflection(1.5, b, {}, wide).r;
    CHECK(rel(r2, r1) < 1e-4);
}

TEST_CASE("wkb matching beats plane waves on twice the box")
{
    const LambertBarrier b{1.0, 0.5, 0.0};
    const double exact = reflection_closed_form(scatter_params(1.5, b)).r;
    const PotentialFn v = potentials::as_function(b);
    const double h = 1.0 / 128.0;
    auto single = [&](double extent, wkb::Matching m) {
        const Solution s = integrate_schrodinger(v, 1.5, aligned_grid(-extent, 40.0, 0.0, h));
        return rel(extract_reflection(s, 1.5, v, {}, m).r, exact);
    };
    for (double extent : {50.0, 100.0}) {
        CHECK(single(extent, wkb::Matching::wkb_phase) <= single(2.0 * extent, wkb::Matching::plane_wave));
    }
    OracleConfig plane;
    plane.matching = wkb::Matching::plane_wave;
    CHECK(rel(oracle_reflection(1.5, b, {}, plane).r, exact) < 1e-2);
}

TEST_CASE("schrodinger residual of exact plane waves")
{
    const std::vector<double> xs{-3.0, 0.0, 2.5};
    const double res = schrodinger_residual([](double x) { return std::polar(1.0, 2.0 * x); }, kFree, 4.0, xs);
    CHECK(res < 1e-7);
    const double wrong = schrodinger_residual([](double x) { return std::polar(1.0, 2.0 * x); }, kFree, 3.0, xs);
    CHECK(wrong > 0.1);
    CHECK(schrodinger_residual([](double x) { return std::polar(1.0, 2.0 * x); }, kFree, 4.0,
                               Grid{-1.0, 1.0, 1001}) < 1e-7);
}
