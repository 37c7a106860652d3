#include "prodlog/potentials.hpp"

#include <cmath>

#include "prodlog/errors.hpp"
#include "prodlog/specfun.hpp"

namespace prodlog {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Below this reduced coordinate the exponential exp(-u) is never formed.
constexpr double kLargeArgument = -30.0;

}  // namespace

void PhysicsConfig::validate() const
{
    if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("PhysicsConfig: mass and hbar must be positive");
}

double GeneralizedBarrier::v2(const PhysicsConfig& physics) const
{
    return -v3 + physics.kinetic_factor() * sigma * sigma * v3 * v3;
}

namespace potentials {

double z_of_x(double x, double sigma, double x0)
{
    if (!(sigma > 0.0)) throw DomainError("z_of_x: sigma must be positive");
    const double u = (x - x0) / sigma;
    if (u < kLargeArgument) return specfun::lambert_w_exp(-u);
    return specfun::lambert_w(std::exp(-u));
}

double log_z_of_x(double x, double sigma, double x0)
{
    // z e^z = e^{-u}  =>  ln z = -u - z
    const double z = z_of_x(x, sigma, x0);
    if (z > 1e-3) return std::log(z);
    return -(x - x0) / sigma - z;
}

double rho(double z, double sigma) { return -(z / sigma) / (1.0 + z); }

double evaluate_in_z(const GeneralizedBarrier& b, double z, const PhysicsConfig& physics)
{
    const double g = 1.0 / (1.0 + z);
    return b.v0 + g * (b.v1 + g * (b.v2(physics) + g * b.v3));
}

double evaluate(const Barrier& barrier, double x, const PhysicsConfig& physics)
{
    return std::visit(
        Overloaded{
            [&](const LambertBarrier& b) { return b.v0 / (1.0 + z_of_x(x, b.sigma, b.x0)); },
            [&](const StepBarrier& b) { return x < 0.0 ? 0.0 : b.v0; },
            [&](const TanhBarrier& b) {
                if (!(b.d > 0.0)) throw DomainError("TanhBarrier: d must be positive");
                return b.v0 / (1.0 + std::exp(-x / b.d));
            },
            [&](const GeneralizedBarrier& b) { return evaluate_in_z(b, z_of_x(x, b.sigma, b.x0), physics); },
            [&](const SqrtRatioBarrier& b) {
                if (!(x > 0.0)) throw DomainError("SqrtRatioBarrier: defined only for x > 0");
                const double r = std::sqrt(x);
                return b.v0 + b.v1 / (r * (r + b.z0));
            },
        },
        barrier);
}

PotentialFn as_function(const Barrier& barrier, const PhysicsConfig& physics)
{
    return [barrier, physics](double x) { return evaluate(barrier, x, physics); };
}

double right_limit(const Barrier& barrier, const PhysicsConfig& physics)
{
    return std::visit(Overloaded{
                          [](const LambertBarrier& b) { return b.v0; },
                          [](const StepBarrier& b) { return b.v0; },
                          [](const TanhBarrier& b) { return b.v0; },
                          [&](const GeneralizedBarrier& b) { return b.v0 + b.v1 + b.v2(physics) + b.v3; },
                          [](const SqrtRatioBarrier& b) { return b.v0; },
                      },
                      barrier);
}

double left_limit(const Barrier& barrier, const PhysicsConfig&)
{
    return std::visit(Overloaded{
                          [](const LambertBarrier&) { return 0.0; },
                          [](const StepBarrier&) { return 0.0; },
                          [](const TanhBarrier&) { return 0.0; },
                          [](const GeneralizedBarrier& b) { return b.v0; },
                          [](const SqrtRatioBarrier&) { return std::nan(""); },
                      },
                      barrier);
}

double length_scale(const Barrier& barrier)
{
    return std::visit(Overloaded{
                          [](const LambertBarrier& b) { return b.sigma; },
                          [](const StepBarrier&) { return 0.0; },
                          [](const TanhBarrier& b) { return b.d; },
                          [](const GeneralizedBarrier& b) { return b.sigma; },
                          [](const SqrtRatioBarrier& b) { return b.z0 * b.z0; },
                      },
                      barrier);
}

double origin(const Barrier& barrier)
{
    return std::visit(Overloaded{
                          [](const LambertBarrier& b) { return b.x0; },
                          [](const GeneralizedBarrier& b) { return b.x0; },
                          [](const auto&) { return 0.0; },
                      },
                      barrier);
}

bool is_discontinuous(const Barrier& barrier) { return std::holds_alternative<StepBarrier>(barrier); }

std::string_view kind_name(const Barrier& barrier)
{
    return std::visit(Overloaded{
                          [](const LambertBarrier&) { return std::string_view("lambert"); },
                          [](const StepBarrier&) { return std::string_view("step"); },
                          [](const TanhBarrier&) { return std::string_view("tanh"); },
                          [](const GeneralizedBarrier&) { return std::string_view("generalized"); },
                          [](const SqrtRatioBarrier&) { return std::string_view("sqrt-ratio"); },
                      },
                      barrier);
}

}  // namespace potentials
}  // namespace prodlog
