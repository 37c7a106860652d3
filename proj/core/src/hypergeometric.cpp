#include <algorithm>
#include <cmath>
#include <numbers>

#include "prodlog/errors.hpp"
#include "prodlog/specfun.hpp"

namespace prodlog::specfun {

namespace {

constexpr int kMaxSeriesTerms = 4000;
constexpr double kTermTolerance = 1e-17;
// Largest |term| / |sum| tolerated before the direct series is abandoned.
constexpr double kMaxSeriesCancellation = 16.0;
// Relative accuracy required of an asymptotic expansion before it is used.
constexpr double kAsymptoticTolerance = 1e-14;
// Cancellation tolerated in the two-term connection formula for U.
constexpr double kMaxConnectionCancellation = 1e6;
constexpr double kAsymptoticMinRadius = 8.0;
constexpr double kSeriesMaxRadius = 60.0;
constexpr double kContinuationStart = 1.0;
constexpr double kContinuationMaxStep = 1.5;
constexpr double kNearInteger = 1e-8;

// Neumaier summation on each component.
class CompensatedSum {
public:
    void add(Complex x)
    {
        add_one(re_, cre_, x.real());
        add_one(im_, cim_, x.imag());
    }
    Complex value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_one(double& s, double& c, double x)
    {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

bool near_nonpositive_integer(Complex b)
{
    const double n = std::nearbyint(b.real());
    return n <= 0.0 && std::abs(b - Complex(n, 0.0)) < kNearInteger;
}

bool near_integer(Complex b)
{
    const double n = std::nearbyint(b.real());
    return std::abs(b - Complex(n, 0.0)) < kNearInteger;
}

// sum_s (p)_s (q)_s / s! x^s, truncated at the smallest term.
struct Truncated {
    Complex value;
    double error = 0.0;
};

Truncated asymptotic_sum(Complex p, Complex q, Complex x)
{
    CompensatedSum sum;
    Complex term = 1.0;
    sum.add(term);
    double last = 1.0;
    for (int s = 0; s < kMaxSeriesTerms; ++s) {
        const Complex next = term * (p + double(s)) * (q + double(s)) * x / double(s + 1);
        const double mag = std::abs(next);
        if (mag == 0.0) return {sum.value(), 0.0};  // terminating series
        if (mag >= last) return {sum.value(), last};
        const Complex current = sum.value();
        if (mag <= kTermTolerance * std::abs(current)) {
            sum.add(next);
            return {sum.value(), mag};
        }
        sum.add(next);
        term = next;
        last = mag;
    }
    return {sum.value(), last};
}

Complex kummer_right_half(Complex a, Complex b, Complex z)
{
    const double r = std::abs(z);
    if (r >= kAsymptoticMinRadius) {
        const auto asym = detail::kummer_asymptotic(a, b, z);
        if (asym.usable) return asym.value;
    }
    if (r <= kSeriesMaxRadius) {
        const auto series = detail::kummer_series(a, b, z);
        if (series.converged && series.max_term <= kMaxSeriesCancellation * std::abs(series.value))
            return series.value;
    }
    const Complex start = z * (kContinuationStart / r);
    const auto m0 = detail::kummer_series(a, b, start);
    const auto m1 = detail::kummer_series(a + 1.0, b + 1.0, start);
    const detail::Jet1 init{m0.value, a / b * m1.value};
    return detail::continue_kummer_ode(a, b, start, init, z).value;
}

}  // namespace

namespace detail {

SeriesSum kummer_series(Complex a, Complex b, Complex z)
{
    CompensatedSum sum;
    Complex term = 1.0;
    sum.add(term);
    SeriesSum out;
    out.max_term = 1.0;
    int small_in_a_row = 0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        term *= (a + double(n)) / (b + double(n)) * z / double(n + 1);
        sum.add(term);
        const double mag = std::abs(term);
        out.max_term = std::max(out.max_term, mag);
        if (mag <= kTermTolerance * std::abs(sum.value())) {
            if (++small_in_a_row >= 2) {
                out.converged = true;
                break;
            }
        } else {
            small_in_a_row = 0;
        }
    }
    out.value = sum.value();
    return out;
}

AsymptoticSum kummer_asymptotic(Complex a, Complex b, Complex z)
{
    AsymptoticSum out;
    if (std::abs(z) < 2.0 || z.real() < 0.0) return out;
    // e^{+i pi a} above the real axis, e^{-i pi a} below
    const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
    const Complex log_z = std::log(z);

    const Truncated s1 = asymptotic_sum(a, a - b + 1.0, -1.0 / z);
    const Truncated s2 = asymptotic_sum(1.0 - a, b - a, 1.0 / z);

    Complex c1 = 0.0;
    Complex c2 = 0.0;
    if (rgamma(b - a) != Complex(0.0, 0.0))
        c1 = std::exp(log_gamma(b) - log_gamma(b - a) + sign * std::numbers::pi * kI * a - a * log_z);
    if (rgamma(a) != Complex(0.0, 0.0))
        c2 = std::exp(log_gamma(b) - log_gamma(a) + z + (a - b) * log_z);

    const Complex t1 = c1 * s1.value;
    const Complex t2 = c2 * s2.value;
    out.value = t1 + t2;
    out.error_estimate = std::abs(c1) * s1.error + std::abs(c2) * s2.error
                         + 4e-15 * (std::abs(t1) + std::abs(t2));
    out.usable = std::isfinite(out.value.real()) && std::isfinite(out.value.imag())
                 && out.error_estimate <= kAsymptoticTolerance * std::abs(out.value);
    return out;
}

AsymptoticSum tricomi_asymptotic(Complex a, Complex b, Complex z)
{
    AsymptoticSum out;
    if (std::abs(z) < 2.0) return out;
    const Truncated s = asymptotic_sum(a, a - b + 1.0, -1.0 / z);
    const Complex pref = complex_pow(z, -a);
    out.value = pref * s.value;
    out.error_estimate = std::abs(pref) * s.error + 2e-15 * std::abs(out.value);
    out.usable = std::isfinite(out.value.real()) && std::isfinite(out.value.imag())
                 && out.error_estimate <= kAsymptoticTolerance * std::abs(out.value);
    return out;
}

Jet1 continue_kummer_ode(Complex a, Complex b, Complex from, Jet1 initial, Complex to)
{
    Complex w0 = from;
    Complex y = initial.value;
    Complex dy = initial.derivative;
    while (w0 != to) {
        const Complex remaining = to - w0;
        const double dist = std::abs(remaining);
        const double r0 = std::abs(w0);
        if (r0 < 1e-3) throw IllConditionedError("continue_kummer_ode: path passes the origin");
        const double hmax = std::min(kContinuationMaxStep, 0.5 * r0);
        const bool last = dist <= hmax;
        const Complex h = last ? remaining : remaining * (hmax / dist);

        // d_n = c_n h^n for the local expansion y(w0 + t) = sum c_n t^n
        Complex d0 = y;
        Complex d1 = dy * h;
        CompensatedSum value;
        CompensatedSum slope;  // sum n d_n
        value.add(d0);
        value.add(d1);
        slope.add(d1);
        const Complex inv_w0 = 1.0 / w0;
        int small_in_a_row = 0;
        for (int n = 0; n < kMaxSeriesTerms; ++n) {
            const double np1 = n + 1.0;
            const Complex d2 = (-np1 * (double(n) + b - w0) * d1 * h + (double(n) + a) * d0 * h * h)
                               * inv_w0 / ((n + 2.0) * np1);
            value.add(d2);
            slope.add((n + 2.0) * d2);
            const double mag = std::abs(d2) * (n + 2.0);
            if (mag <= kTermTolerance * (std::abs(value.value()) + std::abs(slope.value()))) {
                if (++small_in_a_row >= 2) break;
            } else {
                small_in_a_row = 0;
            }
            d0 = d1;
            d1 = d2;
        }
        y = value.value();
        dy = slope.value() / h;
        w0 = last ? to : w0 + h;
    }
    return {y, dy};
}

}  // namespace detail

Complex kummer_m(Complex a, Complex b, Complex z)
{
    if (near_nonpositive_integer(b))
        throw IllConditionedError("kummer_m: b at or near a non-positive integer");
    if (z == Complex(0.0, 0.0)) return 1.0;
    if (std::abs(z) <= kContinuationStart) return detail::kummer_series(a, b, z).value;
    if (z.real() < 0.0) return std::exp(z) * kummer_right_half(b - a, b, -z);
    return kummer_right_half(a, b, z);
}

Complex tricomi_u(Complex a, Complex b, Complex z)
{
    if (z == Complex(0.0, 0.0)) throw DomainError("tricomi_u: z = 0");
    const double r = std::abs(z);
    if (r >= kAsymptoticMinRadius) {
        const auto asym = detail::tricomi_asymptotic(a, b, z);
        if (asym.usable) return asym.value;
    }

    if (!near_integer(b)) {
        const Complex t1 = gamma(1.0 - b) * rgamma(a - b + 1.0) * kummer_m(a, b, z);
        const Complex t2 = gamma(b - 1.0) * rgamma(a) * complex_pow(z, 1.0 - b)
                           * kummer_m(a - b + 1.0, 2.0 - b, z);
        const Complex u = t1 + t2;
        if (std::max(std::abs(t1), std::abs(t2)) <= kMaxConnectionCancellation * std::abs(u))
            return u;
    }

    // Integrate inward from a radius where the asymptotic series is accurate.
    // Moving towards the origin with Re z < 0 amplifies the e^z solution.
    if (z.real() < -0.5)
        throw IllConditionedError("tricomi_u: no stable evaluation route for this argument");
    for (double radius = std::max(2.0 * r, 16.0); radius <= 8192.0; radius *= 2.0) {
        const Complex far = z * (radius / r);
        const auto u0 = detail::tricomi_asymptotic(a, b, far);
        const auto u1 = detail::tricomi_asymptotic(a + 1.0, b + 1.0, far);
        if (!u0.usable || !u1.usable) continue;
        const detail::Jet1 init{u0.value, -a * u1.value};
        return detail::continue_kummer_ode(a, b, far, init, z).value;
    }
    throw IllConditionedError("tricomi_u: asymptotic region out of reach");
}

}  // namespace prodlog::specfun
