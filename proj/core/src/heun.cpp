#include "prodlog/heun.hpp"

#include <algorithm>
#include <cmath>

#include "prodlog/errors.hpp"

namespace prodlog::heun {

namespace {

bool is_nonpositive_integer(Complex g)
{
    const double n = std::nearbyint(g.real());
    return n <= 0.0 && std::abs(g - Complex(n, 0.0)) < 1e-12;
}

double scaled(Complex residual, std::initializer_list<Complex> terms)
{
    double largest = 0.0;
    for (Complex t : terms) largest = std::max(largest, std::abs(t));
    return largest == 0.0 ? 0.0 : std::abs(residual) / largest;
}

}  // namespace

Complex BiconfluentParams::z0() const
{
    if (alpha == Complex(0.0, 0.0)) return -1.0;
    return q / alpha;
}

BiconfluentParams GeneralizedSolutionParams::biconfluent() const
{
    return {gamma, delta, 0.0, alpha, -alpha};
}

GeneralizedSolutionParams map_params(double energy, const GeneralizedBarrier& barrier, const PhysicsConfig& physics)
{
    physics.validate();
    if (!(barrier.sigma > 0.0)) throw DomainError("map_params: sigma must be positive");
    const double k = physics.kinetic_factor();
    const double s2 = barrier.sigma * barrier.sigma;
    const double inner = k * (-energy + barrier.v0 + barrier.v1 + k * s2 * barrier.v3 * barrier.v3);
    GeneralizedSolutionParams p;
    p.gamma = 2.0 * barrier.sigma * std::sqrt(Complex(inner, 0.0));
    p.delta = p.gamma + 2.0 * k * s2 * barrier.v3;
    p.alpha = k * s2 * (barrier.v1 + p.delta * barrier.v3);
    return p;
}

SeriesValue biconfluent_series(const BiconfluentParams& p, Complex z, int terms)
{
    if (is_nonpositive_integer(p.gamma))
        throw DomainError("biconfluent_series: gamma is a non-positive integer");
    if (terms < 4) throw DomainError("biconfluent_series: need at least 4 terms");

    // (n+1)(n+gamma) c_{n+1} = (q - delta n) c_n - (alpha + eps (n-1)) c_{n-1}
    Complex prev = 0.0;
    Complex cur = 1.0;
    // z^n, n z^{n-1}, n(n-1) z^{n-2}, n(n-1)(n-2) z^{n-3}
    Complex zn = 1.0;
    Complex zn1 = 0.0;
    Complex zn2 = 0.0;
    Complex zn3 = 0.0;
    SeriesValue out;
    Complex last_term = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double dn = n;
        out.u += cur * zn;
        if (n >= 1) out.du += dn * cur * zn1;
        if (n >= 2) out.d2u += dn * (dn - 1.0) * cur * zn2;
        if (n >= 3) out.d3u += dn * (dn - 1.0) * (dn - 2.0) * cur * zn3;
        last_term = cur * zn;

        const Complex next = ((p.q - p.delta * dn) * cur - (p.alpha + p.eps * (dn - 1.0)) * prev)
                             / ((dn + 1.0) * (dn + p.gamma));
        prev = cur;
        cur = next;
        zn3 = zn2;
        zn2 = zn1;
        zn1 = zn;
        zn *= z;
    }
    out.truncation = std::abs(out.u) > 0.0 ? std::abs(last_term) / std::abs(out.u) : std::abs(last_term);
    return out;
}

double biconfluent_residual(const BiconfluentParams& p, Complex z, const SeriesValue& v)
{
    const Complex t1 = v.d2u;
    const Complex t2 = (p.gamma / z + p.delta + p.eps * z) * v.du;
    const Complex t3 = (p.alpha * z - p.q) / z * v.u;
    return scaled(t1 + t2 + t3, {t1, t2, t3});
}

TransformValue w_transform(const BiconfluentParams& p, Complex z, Complex u, Complex du)
{
    if (z == Complex(0.0, 0.0)) throw DomainError("w_transform: z = 0");
    const Complex pref = std::exp(p.gamma * std::log(z) + p.delta * z + 0.5 * p.eps * z * z);
    return {pref * du, -pref * (p.alpha * z - p.q) / z * u};
}

double derived_equation_residual(const BiconfluentParams& p, Complex z, const SeriesValue& v)
{
    if (z == Complex(0.0, 0.0)) throw DomainError("derived_equation_residual: z = 0");
    const Complex pref = std::exp(p.gamma * std::log(z) + p.delta * z + 0.5 * p.eps * z * z);
    const Complex f = p.gamma / z + p.delta + p.eps * z;  // (ln pref)'
    const Complex df = -p.gamma / (z * z) + p.eps;
    const Complex w = pref * v.du;
    const Complex dw = pref * (f * v.du + v.d2u);
    const Complex d2w = pref * ((f * f + df) * v.du + 2.0 * f * v.d2u + v.d3u);

    const Complex z0 = p.z0();
    const Complex t2 = -((p.gamma - 1.0) / z + p.delta + p.eps * z + 1.0 / (z - z0)) * dw;
    const Complex t3 = p.alpha * (z - z0) / z * w;
    return scaled(d2w + t2 + t3, {d2w, t2, t3});
}

InvariantMatch invariant_match(const BiconfluentParams& p, double z, double sigma,
                               const std::function<double(double)>& potential_of_z, double energy,
                               const PhysicsConfig& physics)
{
    if (!(z > 0.0)) throw DomainError("invariant_match: z must be positive");
    if (!(sigma > 0.0)) throw DomainError("invariant_match: sigma must be positive");
    const Complex z0 = p.z0();
    const Complex zc = z;

    // w'' + F w' + G w = 0
    const Complex f = -((p.gamma - 1.0) / zc + p.delta + p.eps * zc + 1.0 / (zc - z0));
    const Complex df = (p.gamma - 1.0) / (zc * zc) - p.eps + 1.0 / ((zc - z0) * (zc - z0));
    const Complex g = p.alpha * (zc - z0) / zc;

    // rho = -(z/sigma)/(z - z0), so rho'/rho = 1/z - 1/(z - z0)
    const Complex lr = 1.0 / zc - 1.0 / (zc - z0);
    const Complex dlr = -1.0 / (zc * zc) + 1.0 / ((zc - z0) * (zc - z0));
    const Complex rho2 = zc * zc / (sigma * sigma * (zc - z0) * (zc - z0));

    const Complex geometric = -0.5 * dlr - 0.25 * lr * lr;
    const Complex kinetic_energy = physics.kinetic_factor() * energy / rho2;
    const Complex kinetic_potential = -physics.kinetic_factor() * potential_of_z(z) / rho2;

    InvariantMatch out;
    out.lhs = g - 0.5 * df - 0.25 * f * f;
    out.rhs = geometric + kinetic_energy + kinetic_potential;
    // scale by the Schrodinger-side terms: both sides may pass through zero
    double scale = 0.0;
    for (Complex t : {geometric, kinetic_energy, kinetic_potential}) scale = std::max(scale, std::abs(t));
    out.gap = scale == 0.0 ? 0.0 : std::abs(out.lhs - out.rhs) / scale;
    return out;
}

InvariantMatch invariant_match(const BiconfluentParams& p, double z, const GeneralizedBarrier& barrier,
                               double energy, const PhysicsConfig& physics)
{
    return invariant_match(
        p, z, barrier.sigma, [&](double zz) { return potentials::evaluate_in_z(barrier, zz, physics); }, energy,
        physics);
}

Complex HypergeometricReduction::evaluate(Complex z) const
{
    return std::exp(mu * z) * specfun::kummer_m(a, b, lambda * z);
}

Complex HypergeometricReduction::derivative(Complex z) const
{
    const Complex m0 = specfun::kummer_m(a, b, lambda * z);
    const Complex m1 = specfun::kummer_m(a + 1.0, b + 1.0, lambda * z);
    return std::exp(mu * z) * (mu * m0 + lambda * a / b * m1);
}

HypergeometricReduction reduce_to_hypergeometric(const BiconfluentParams& p)
{
    if (p.eps != Complex(0.0, 0.0))
        throw UnsupportedRegimeError("reduce_to_hypergeometric: only eps = 0 reduces to Kummer functions");
    HypergeometricReduction r;
    r.lambda = std::sqrt(p.delta * p.delta - 4.0 * p.alpha);
    if (r.lambda.imag() < 0.0 || (r.lambda.imag() == 0.0 && r.lambda.real() < 0.0)) r.lambda = -r.lambda;
    if (r.lambda == Complex(0.0, 0.0))
        throw DomainError("reduce_to_hypergeometric: delta^2 = 4 alpha gives a degenerate exponent");
    r.mu = -0.5 * (p.delta + r.lambda);
    r.a = (p.q - p.gamma * r.mu) / r.lambda;
    r.b = p.gamma;
    return r;
}

HypergeometricReduction reduce_to_hypergeometric(const GeneralizedSolutionParams& p)
{
    return reduce_to_hypergeometric(p.biconfluent());
}

WaveValue heun_wavefunction(double x, double energy, const GeneralizedBarrier& barrier, const PhysicsConfig& physics)
{
    const GeneralizedSolutionParams gp = map_params(energy, barrier, physics);
    const BiconfluentParams p = gp.biconfluent();
    const HypergeometricReduction red = reduce_to_hypergeometric(p);
    const double z = potentials::z_of_x(x, barrier.sigma, barrier.x0);
    const double log_z = potentials::log_z_of_x(x, barrier.sigma, barrier.x0);

    const Complex m0 = specfun::kummer_m(red.a, red.b, red.lambda * z);
    const Complex m1 = specfun::kummer_m(red.a + 1.0, red.b + 1.0, red.lambda * z);
    // e^{delta z/2} e^{mu z} = e^{-lambda z/2}
    const Complex common = std::exp(0.5 * p.gamma * log_z - 0.5 * red.lambda * z);
    const Complex du = red.mu * m0 + red.lambda * red.a / red.b * m1;  // u' / e^{mu z}

    // dpsi/dz from the Heun equation for u'', then dz/dx = -(z/sigma)/(1+z)
    const Complex z_dpsi_dz = common * (-(0.5 * p.gamma + 0.5 * p.delta * z) * du - (p.alpha * z - p.q) * m0);
    return {common * du, -z_dpsi_dz / (barrier.sigma * (1.0 + z))};
}

BasisCoefficients lambert_equivalent_coefficients(const ScatterParams& params)
{
    const Complex big_a = kI * params.a;
    const Complex big_b = kI * params.delta;
    const Complex c2 = std::exp(specfun::log_gamma(big_a - big_b + 1.0) - specfun::log_gamma(1.0 - big_b));
    const Complex c1 = -c2 * std::exp(specfun::log_gamma(big_b - 1.0) - specfun::log_gamma(big_a));
    return {c1, c2};
}

}  // namespace prodlog::heun
