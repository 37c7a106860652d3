#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace prodlog::cli {

enum class Relation { at_most, at_least, below, above };

/// One measured quantity compared against its tolerance.
struct Check {
    int criterion = 0;
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::at_most;
    std::string detail;

    bool passed() const;
};

struct RunReport {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<Check> checks;
    double wall_ms = 0.0;

    bool passed() const;
    nlohmann::json to_json() const;
};

std::string_view relation_symbol(Relation r);

}  // namespace prodlog::cli
