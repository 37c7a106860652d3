#include "prodlog_cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "prodlog/errors.hpp"
#include "prodlog_cli/commands.hpp"
#include "prodlog_cli/suite.hpp"

namespace prodlog::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_physics(CLI::App* sub, PhysicsConfig& physics)
{
    sub->add_option("--mass", physics.mass, "particle mass (default 0.5, so 2m/hbar^2 = 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--hbar", physics.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
}

// Writes `emit` to the named file, or to `out` when the name is empty.
template <class Emit>
void with_output(const std::string& path, std::ostream& out, Emit emit)
{
    if (path.empty() || path == "-") {
        emit(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path + " for writing");
    emit(file);
}

// out.csv + ("sigma", 2) -> out_sigma2.csv
std::string suffixed(const std::string& path, const std::string& name, double value)
{
    const std::filesystem::path p(path);
    const std::string tag = "_" + name + format_number(value);
    return (p.parent_path() / (p.stem().string() + tag + p.extension().string())).string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scattering by the Lambert-W step potential: sweeps, wavefunctions and verification"};
    app.require_subcommand(1);

    // potential
    PotentialOptions pot;
    std::vector<double> pot_sigmas{1.0};
    std::vector<double> pot_ds{1.0};
    std::string pot_out;
    auto* potential = app.add_subcommand("potential", "tabulate a barrier: x,V[,z]");
    potential->add_option("--kind", pot.kind, "lambert | step | tanh | generalized | sqrt-ratio")
        ->check(CLI::IsMember({"lambert", "step", "tanh", "generalized", "sqrt-ratio"}));
    potential->add_option("--v0", pot.v0, "barrier height");
    potential->add_option("--sigma", pot_sigmas, "Lambert width; several values give one file each")
        ->check(CLI::PositiveNumber);
    potential->add_option("--d", pot_ds, "tanh width; several values give one file each")->check(CLI::PositiveNumber);
    potential->add_option("--x0", pot.x0, "space origin");
    potential->add_option("--v1", pot.v1, "generalized / sqrt-ratio V1");
    potential->add_option("--v3", pot.v3, "generalized V3");
    potential->add_option("--z0", pot.z0, "sqrt-ratio z0");
    potential->add_option("--xmin", pot.xmin);
    potential->add_option("--xmax", pot.xmax);
    potential->add_option("--n", pot.n, "number of points")->check(CLI::Range(2, 100000000));
    potential->add_option("--out", pot_out, "CSV file (stdout when omitted)");
    add_physics(potential, pot.physics);

    // reflect
    ReflectOptions ref;
    std::string ref_method = "closed";
    std::vector<std::string> ref_compare;
    std::string ref_sweep = "energy";
    double ref_d = 0.0;
    std::string ref_out;
    auto* reflect = app.add_subcommand("reflect", "reflection coefficient sweeps");
    reflect->add_option("--v0", ref.v0, "barrier height");
    reflect->add_option("--sigma", ref.sigma, "Lambert width (energy sweep)")->check(CLI::PositiveNumber);
    reflect->add_option("--emin", ref.emin);
    reflect->add_option("--emax", ref.emax);
    reflect->add_option("--n", ref.n, "number of sweep points")->check(CLI::Range(1, 10000000));
    reflect->add_option("--method", ref_method, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    reflect->add_option("--compare", ref_compare, "baselines: step,tanh")
        ->delimiter(',')
        ->check(CLI::IsMember({"step", "tanh"}));
    auto* d_opt = reflect->add_option("--d", ref_d, "tanh width (default: follow sigma)")->check(CLI::PositiveNumber);
    reflect->add_option("--sweep", ref_sweep, "energy | sigma")->check(CLI::IsMember({"energy", "sigma"}));
    reflect->add_option("--energy", ref.energy, "fixed energy of a sigma sweep");
    reflect->add_option("--smin", ref.smin, "sigma sweep start")->check(CLI::PositiveNumber);
    reflect->add_option("--smax", ref.smax, "sigma sweep end")->check(CLI::PositiveNumber);
    reflect->add_option("--jobs", ref.jobs, "worker threads")->check(CLI::Range(1, 1024));
    reflect->add_option("--out", ref_out, "CSV file (stdout when omitted)");
    add_physics(reflect, ref.physics);

    // wavefunction
    WavefunctionOptions wf;
    double c1_re = 1.0, c1_im = 0.0, c2_re = 0.0, c2_im = 0.0;
    std::string wf_out;
    auto* wave = app.add_subcommand("wavefunction", "exact wavefunction: x,re_psi,im_psi,density");
    wave->add_option("--e", wf.e, "energy");
    wave->add_option("--v0", wf.v0, "barrier height");
    wave->add_option("--sigma", wf.sigma, "Lambert width")->check(CLI::PositiveNumber);
    wave->add_option("--x0", wf.x0, "space origin");
    wave->add_option("--c1-re", c1_re, "Kummer-member coefficient");
    wave->add_option("--c1-im", c1_im);
    wave->add_option("--c2-re", c2_re, "Tricomi-member coefficient");
    wave->add_option("--c2-im", c2_im);
    wave->add_option("--xmin", wf.xmin);
    wave->add_option("--xmax", wf.xmax);
    wave->add_option("--n", wf.n, "number of points")->check(CLI::Range(2, 100000000));
    wave->add_option("--out", wf_out, "CSV file (stdout when omitted)");
    add_physics(wave, wf.physics);

    // verify
    SuiteOptions suite;
    std::string level = "quick";
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks and emit a JSON report");
    verify->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--criterion", suite.only, "run a single criterion (1-10)")->check(CLI::Range(1, kCriterionCount));
    verify->add_flag("--literal-a-term", suite.literal_a_term,
                     "use a = delta(delta+s)/(2s) + sigma sqrt(m V0)/(sqrt(2E) hbar) (negative control)");
    verify->add_option("--out", verify_out, "JSON file (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (potential->parsed()) {
            const bool sweep_sigma = pot.kind == "lambert" || pot.kind == "generalized";
            const bool sweep_d = pot.kind == "tanh";
            const auto& values = sweep_sigma ? pot_sigmas : sweep_d ? pot_ds : std::vector<double>{0.0};
            if (values.size() > 1 && pot_out.empty()) throw UsageError("several parameter sets need --out");
            for (double v : values) {
                PotentialOptions o = pot;
                if (sweep_sigma) o.sigma = v;
                if (sweep_d) o.d = v;
                const std::string path = values.size() > 1 ? suffixed(pot_out, sweep_sigma ? "sigma" : "d", v) : pot_out;
                const Table t = potential_table(o);
                with_output(path, out, [&](std::ostream& os) { write_csv(os, t); });
            }
            return exit_ok;
        }
        if (reflect->parsed()) {
            ref.method = ref_method == "oracle" ? ReflectMethod::oracle
                         : ref_method == "both" ? ReflectMethod::both
                                                : ReflectMethod::closed;
            ref.compare_step = std::find(ref_compare.begin(), ref_compare.end(), "step") != ref_compare.end();
            ref.compare_tanh = std::find(ref_compare.begin(), ref_compare.end(), "tanh") != ref_compare.end();
            if (d_opt->count() > 0) ref.d = ref_d;
            ref.sweep = ref_sweep == "sigma" ? SweepAxis::sigma : SweepAxis::energy;
            const Table t = reflect_table(ref);
            with_output(ref_out, out, [&](std::ostream& os) { write_csv(os, t); });
            return exit_ok;
        }
        if (wave->parsed()) {
            wf.coeffs = {Complex(c1_re, c1_im), Complex(c2_re, c2_im)};
            const Table t = wavefunction_table(wf);
            with_output(wf_out, out, [&](std::ostream& os) { write_csv(os, t); });
            return exit_ok;
        }
        if (verify->parsed()) {
            suite.level = level == "full" ? Level::full : Level::quick;
            const RunReport report = run_suite(suite);
            with_output(verify_out, out, [&](std::ostream& os) { os << report.to_json().dump(2) << '\n'; });
            for (const auto& c : report.checks)
                if (!c.passed()) err << "FAIL " << c.name << ": measured " << format_number(c.measured) << ", required "
                                     << relation_symbol(c.relation) << ' ' << format_number(c.tolerance) << '\n';
            return report.passed() ? exit_ok : exit_verification_failed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const prodlog::Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}

}  // namespace prodlog::cli
