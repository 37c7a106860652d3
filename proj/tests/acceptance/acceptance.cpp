// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prodlog_cli/suite.hpp"
#include "prodlog_cli/table.hpp"

using namespace prodlog::cli;

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::string level = "full";
    app.add_option("--criterion", only, "run one criterion (1-10)")->check(CLI::Range(1, kCriterionCount));
    app.add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    CLI11_PARSE(app, argc, argv);

    SuiteOptions opts;
    opts.level = level == "quick" ? Level::quick : Level::full;

    bool all = true;
    for (int c = 1; c <= kCriterionCount; ++c) {
        if (only != 0 && c != only) continue;
        const auto checks = run_criterion(c, opts);
        bool ok = !checks.empty();
        std::ostringstream summary;
        for (const Check& k : checks) {
            ok = ok && k.passed();
            summary << (summary.tellp() > 0 ? "; " : " | ") << (k.passed() ? "" : "FAIL ") << k.name << " = " << format_number(k.measured)
                    << " (" << relation_symbol(k.relation) << ' ' << format_number(k.tolerance) << ')';
            if (!k.detail.empty()) summary << " [" << k.detail << ']';
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c << ": " << criterion_title(c) << summary.str()
                  << '\n';
        all = all && ok;
    }
    return all ? 0 : 1;
}
