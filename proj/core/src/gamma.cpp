#include <array>
#include <cmath>
#include <numbers>

#include "prodlog/errors.hpp"
#include "prodlog/specfun.hpp"

namespace prodlog::specfun {

namespace {

// Lanczos approximation, g = 671/128, 14 terms; relative error of Gamma
// below 1e-15 on Re z >= 1/2.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};
constexpr double kSqrt2Pi = 2.5066282746310005;

bool is_pole(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

Complex log_gamma_right(Complex z)
{
    Complex tmp = z + kLanczosG;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex ser = kLanczosC0;
    Complex y = z;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(kSqrt2Pi * ser / z);
}

// ln sin(pi z), modulo 2 pi i, without overflow for large |Im z|.
Complex log_sin_pi(Complex z)
{
    constexpr double pi = std::numbers::pi;
    const double y = z.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(pi * z));
    if (y > 0.0) {
        const Complex small = std::exp(2.0 * pi * kI * z);
        return -pi * kI * z + std::log(Complex(0.0, 0.5) * (1.0 - small));
    }
    const Complex small = std::exp(-2.0 * pi * kI * z);
    return pi * kI * z + std::log((1.0 - small) / Complex(0.0, 2.0));
}

}  // namespace

Complex log_gamma(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (is_pole(z)) throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
    }
    return log_gamma_right(z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z)
{
    if (is_pole(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

Complex complex_pow(Complex base, Complex exponent)
{
    if (base == Complex(0.0, 0.0)) {
        if (exponent.real() > 0.0) return 0.0;
        throw DomainError("complex_pow: zero base with Re(exponent) <= 0");
    }
    Complex log_base = std::log(base);
    // arg in (-pi, pi]: a negative real base with a -0.0 imaginary part
    // would otherwise land on -pi.
    if (log_base.imag() == -std::numbers::pi) log_base.imag(std::numbers::pi);
    return std::exp(exponent * log_base);
}

}  // namespace prodlog::specfun
