#include "prodlog_cli/commands.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

#include "prodlog/errors.hpp"
#include "prodlog/oracle.hpp"

namespace prodlog::cli {

namespace {

// Fills rows[i] = fn(i) on up to `jobs` threads.
void parallel_rows(std::vector<std::vector<double>>& rows, int jobs,
                   const std::function<std::vector<double>(std::size_t)>& fn)
{
    const std::size_t n = rows.size();
    const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : std::size_t(jobs), 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) rows[i] = fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) rows[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

bool uses_lambert_coordinate(const Barrier& b)
{
    return std::holds_alternative<LambertBarrier>(b) || std::holds_alternative<GeneralizedBarrier>(b);
}

double lambert_coordinate(const Barrier& b, double x)
{
    if (const auto* l = std::get_if<LambertBarrier>(&b)) return potentials::z_of_x(x, l->sigma, l->x0);
    const auto& g = std::get<GeneralizedBarrier>(b);
    return potentials::z_of_x(x, g.sigma, g.x0);
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n)
{
    if (n < 1) throw DomainError("linspace: need at least one point");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[std::size_t(i)] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    if (n > 1) out.back() = hi;
    return out;
}

Barrier make_barrier(const PotentialOptions& o)
{
    if (o.kind == "lambert") return LambertBarrier{o.v0, o.sigma, o.x0};
    if (o.kind == "step") return StepBarrier{o.v0};
    if (o.kind == "tanh") return TanhBarrier{o.v0, o.d};
    if (o.kind == "generalized") return GeneralizedBarrier{o.v0, o.v1, o.v3, o.sigma, o.x0};
    if (o.kind == "sqrt-ratio") return SqrtRatioBarrier{o.v0, o.v1, o.z0};
    throw DomainError("unknown potential kind: " + o.kind);
}

Table potential_table(const PotentialOptions& o)
{
    if (o.n < 2) throw DomainError("potential: need at least two points");
    if (!(o.xmin < o.xmax)) throw DomainError("potential: xmin must be below xmax");
    o.physics.validate();
    const Barrier barrier = make_barrier(o);
    const bool with_z = uses_lambert_coordinate(barrier);

    Table t;
    t.header = with_z ? std::vector<std::string>{"x", "V", "z"} : std::vector<std::string>{"x", "V"};
    for (double x : linspace(o.xmin, o.xmax, o.n)) {
        std::vector<double> row{x, potentials::evaluate(barrier, x, o.physics)};
        if (with_z) row.push_back(lambert_coordinate(barrier, x));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table reflect_table(const ReflectOptions& o)
{
    o.physics.validate();
    const bool closed = o.method != ReflectMethod::oracle;
    const bool oracle = o.method != ReflectMethod::closed;
    std::vector<double> axis;
    if (o.sweep == SweepAxis::energy) {
        if (!(o.emin > o.v0)) throw UnsupportedRegimeError("reflect: emin must exceed v0");
        if (o.emax < o.emin) throw DomainError("reflect: emax below emin");
        axis = linspace(o.emin, o.emax, o.n);
    } else {
        if (!(o.energy > o.v0)) throw UnsupportedRegimeError("reflect: energy must exceed v0");
        if (!(o.smin > 0.0) || o.smax < o.smin) throw DomainError("reflect: need 0 < smin <= smax");
        axis = linspace(o.smin, o.smax, o.n);
    }

    Table t;
    t.header.push_back(o.sweep == SweepAxis::energy ? "E" : "sigma");
    if (closed) t.header.push_back("R_lambert");
    if (oracle) t.header.push_back("R_oracle");
    if (o.compare_step) t.header.push_back("R_step");
    if (o.compare_tanh) t.header.push_back("R_tanh");
    if (closed && oracle) t.header.push_back("rel_gap");

    t.rows.resize(axis.size());
    parallel_rows(t.rows, o.jobs, [&](std::size_t i) {
        const double energy = o.sweep == SweepAxis::energy ? axis[i] : o.energy;
        const double sigma = o.sweep == SweepAxis::sigma ? axis[i] : o.sigma;
        const LambertBarrier barrier{o.v0, sigma, 0.0};
        const WaveNumbers k = wave_numbers(energy, o.v0, o.physics);
        std::vector<double> row{axis[i]};
        double r_closed = 0.0;
        double r_oracle = 0.0;
        if (closed) {
            r_closed = reflection_closed_form(scatter_params(energy, barrier, o.physics)).r;
            row.push_back(r_closed);
        }
        if (oracle) {
            r_oracle = oracle::oracle_reflection(energy, barrier, o.physics).r;
            row.push_back(r_oracle);
        }
        if (o.compare_step) row.push_back(reflection_step(k).r);
        if (o.compare_tanh) row.push_back(reflection_tanh(k, o.d.value_or(sigma)).r);
        if (closed && oracle) row.push_back(std::abs(r_closed - r_oracle) / r_closed);
        return row;
    });
    return t;
}

Table wavefunction_table(const WavefunctionOptions& o)
{
    if (o.n < 2) throw DomainError("wavefunction: need at least two points");
    if (!(o.e > o.v0)) throw UnsupportedRegimeError("wavefunction: energy must exceed v0");
    const LambertSolution solution(o.e, LambertBarrier{o.v0, o.sigma, o.x0}, o.coeffs, o.physics);
    Table t;
    t.header = {"x", "re_psi", "im_psi", "density"};
    for (double x : linspace(o.xmin, o.xmax, o.n)) {
        const Complex psi = solution(x).psi;
        t.rows.push_back({x, psi.real(), psi.imag(), std::norm(psi)});
    }
    return t;
}

}  // namespace prodlog::cli
