#include "prodlog_cli/report.hpp"

#include <algorithm>
#include <cmath>

namespace prodlog::cli {

bool Check::passed() const
{
    if (!std::isfinite(measured)) return false;
    switch (relation) {
    case Relation::at_most: return measured <= tolerance;
    case Relation::at_least: return measured >= tolerance;
    case Relation::below: return measured < tolerance;
    case Relation::above: return measured > tolerance;
    }
    return false;
}

std::string_view relation_symbol(Relation r)
{
    switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::below: return "<";
    case Relation::above: return ">";
    }
    return "?";
}

bool RunReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

nlohmann::json RunReport::to_json() const
{
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    j["status"] = passed() ? "pass" : "fail";
    j["wall_ms"] = wall_ms;
    auto& list = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e{{"criterion", c.criterion},
                         {"name", c.name},
                         {"status", c.passed() ? "pass" : "fail"},
                         {"measured", std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr)},
                         {"tolerance", c.tolerance},
                         {"relation", relation_symbol(c.relation)}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        list.push_back(std::move(e));
    }
    return j;
}

}  // namespace prodlog::cli
