#include <cmath>
#include <limits>

#include "prodlog/errors.hpp"
#include "prodlog/specfun.hpp"

namespace prodlog::specfun {

namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e
constexpr double kE = 2.718281828459045;
constexpr int kMaxIterations = 50;
constexpr double kStepTolerance = 1e-15;

// Halley iteration on f(w) = w e^w - t.
double halley_direct(double t, double w)
{
    for (int it = 0; it < kMaxIterations; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - t;
        if (f == 0.0) break;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;  // branch point, t == -1/e
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= kStepTolerance * (1.0 + std::abs(w))) break;
    }
    return w;
}

// Halley iteration on f(w) = w + ln w - L, used for large arguments so that
// exp(w) is never formed.
double halley_log_form(double log_t, double w)
{
    for (int it = 0; it < kMaxIterations; ++it) {
        const double f = w + std::log(w) - log_t;
        if (f == 0.0) break;
        const double fp = 1.0 + 1.0 / w;
        const double fpp = -1.0 / (w * w);
        const double step = f / (fp - f * fpp / (2.0 * fp));
        const double next = w - step;
        w = next > 0.0 ? next : 0.5 * w;
        if (std::abs(step) <= kStepTolerance * w) break;
    }
    return w;
}

}  // namespace

double lambert_w(double t)
{
    if (std::isnan(t)) throw DomainError("lambert_w: NaN argument");
    if (t < -kInvE) {
        // allow the rounding of -1/e itself
        if (t < -kInvE * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()))
            throw DomainError("lambert_w: argument below -1/e");
        return -1.0;
    }
    if (t == 0.0) return 0.0;
    if (std::isinf(t)) return t;
    if (t > kE) return lambert_w_exp(std::log(t));

    double w0;
    if (t < -0.25) {
        // expansion about the branch point
        const double p = std::sqrt(std::max(0.0, 2.0 * (kE * t + 1.0)));
        w0 = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (t <= 1.0) {
        w0 = t * (1.0 - t);
    } else {
        // linear between W(1) = 0.567... and W(e) = 1
        w0 = 0.5671432904097838 + (1.0 - 0.5671432904097838) * (t - 1.0) / (kE - 1.0);
    }
    return halley_direct(t, w0);
}

double lambert_w_exp(double log_t)
{
    if (std::isnan(log_t)) throw DomainError("lambert_w_exp: NaN argument");
    if (log_t <= 1.0) return lambert_w(std::exp(log_t));
    if (std::isinf(log_t)) return log_t;
    const double ll = std::log(log_t);
    const double w0 = log_t - ll + ll / log_t;
    return halley_log_form(log_t, w0 > 0.5 ? w0 : 1.0);
}

}  // namespace prodlog::specfun
