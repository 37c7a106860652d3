#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodlog/analytic.hpp"
#include "prodlog/potentials.hpp"
#include "prodlog_cli/table.hpp"

namespace prodlog::cli {

struct PotentialOptions {
    std::string kind = "lambert";  // lambert, step, tanh, generalized, sqrt-ratio
    double v0 = 1.0;
    double sigma = 1.0;  // Lambert and generalized width
    double d = 1.0;      // tanh width
    double x0 = 0.0;
    double v1 = 1.0;
    double v3 = 0.0;
    double z0 = 1.0;
    double xmin = -10.0;
    double xmax = 10.0;
    int n = 1000;
    PhysicsConfig physics;
};

/// Throws DomainError for an unknown kind.
Barrier make_barrier(const PotentialOptions& opts);

/// Columns x,V plus z for barriers defined through the Lambert coordinate.
Table potential_table(const PotentialOptions& opts);

enum class ReflectMethod { closed, oracle, both };
enum class SweepAxis { energy, sigma };

struct ReflectOptions {
    double v0 = 1.0;
    double sigma = 1.0;
    double emin = 1.01;
    double emax = 4.0;
    int n = 100;
    ReflectMethod method = ReflectMethod::closed;
    bool compare_step = false;
    bool compare_tanh = false;
    std::optional<double> d;  // tanh width; follows sigma when unset
    SweepAxis sweep = SweepAxis::energy;
    double energy = 1.5;  // fixed energy of a sigma sweep
    double smin = 0.5;
    double smax = 12.0;
    int jobs = 1;
    PhysicsConfig physics;
};

/// Columns E (or sigma), R_lambert, R_oracle, R_step, R_tanh, rel_gap as
/// selected. Rows keep input order for any number of jobs. Throws
/// UnsupportedRegimeError when an energy does not exceed V0.
Table reflect_table(const ReflectOptions& opts);

struct WavefunctionOptions {
    double e = 2.0;
    double v0 = 1.0;
    double sigma = 1.0;
    double x0 = 0.0;
    BasisCoefficients coeffs;
    double xmin = -20.0;
    double xmax = 20.0;
    int n = 1000;
    PhysicsConfig physics;
};

/// Columns x,re_psi,im_psi,density.
Table wavefunction_table(const WavefunctionOptions& opts);

/// Evenly spaced values from lo to hi inclusive; a single point gives {lo}.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace prodlog::cli
